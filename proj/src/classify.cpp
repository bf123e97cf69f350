#include "indy3/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "indy3/enumerate.hpp"
#include "indy3/exact.hpp"
#include "json.hpp"

namespace indy3 {

const char* to_string(Taxonomy t) {
    switch (t) {
        case Taxonomy::BicriticallyNonReal: return "BicriticallyNonReal";
        case Taxonomy::Unicritical: return "Unicritical";
        case Taxonomy::BicriticallyReal: return "BicriticallyReal";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Connected: return "Connected";
        case Verdict::TotallyDisconnected: return "TotallyDisconnected";
        case Verdict::DisconnectedNotTotally: return "DisconnectedNotTotally";
        case Verdict::DisconnectedTotalityUnresolved: return "DisconnectedTotalityUnresolved";
        case Verdict::ExplicitSet: return "ExplicitSet";
    }
    return "?";
}

const char* to_string(AttractorComposition c) {
    return c == AttractorComposition::JuliaOnly ? "JuliaOnly" : "JuliaPlusRootUnion";
}

const char* to_string(Realizable r) {
    switch (r) {
        case Realizable::Yes: return "Yes";
        case Realizable::No: return "No";
        case Realizable::Unknown: return "Unknown";
    }
    return "?";
}

ClassificationReport classify(const Cubic& P, unsigned max_iter) {
    if (P.a1 < 3 || P.a2 < 3 || P.a3 < 1)
        throw std::invalid_argument("classify requires a1 >= 3, a2 >= 3, a3 >= 1");

    ClassificationReport rep;
    rep.structure = structure_report(P);
    rep.evidence = critical_orbit_evidence(P, max_iter);
    rep.attractor_composition = (P.a2 == 2 * P.a1 - 3 && P.a3 == P.a1 - 2)
                                    ? AttractorComposition::JuliaPlusRootUnion
                                    : AttractorComposition::JuliaOnly;
    FeasibilityResult feas = feasibility(P, P.a1 <= 7);
    rep.realizable = feas.status == Feasibility::Feasible     ? Realizable::Yes
                     : feas.status == Feasibility::Infeasible ? Realizable::No
                                                              : Realizable::Unknown;

    const std::int64_t a1 = P.a1;
    const int s_crit = crit_disc_sign(P.a1, P.a2, P.a3);
    if (s_crit < 0) {
        rep.taxonomy = Taxonomy::BicriticallyNonReal;
        rep.subcase = "BNR";
        rep.verdict = Verdict::TotallyDisconnected;
        return rep;
    }
    if (s_crit == 0) {
        rep.taxonomy = Taxonomy::Unicritical;
        if (a1 == 3) {
            rep.subcase = "U-a1=3";
            rep.verdict = Verdict::ExplicitSet;
            rep.explicit_description = "{-1} ∪ {z: |z+1| = 1}";
        } else if (a1 == 4) {
            // not attainable from any graph; the polynomial still classifies
            rep.subcase = "U-a1=4";
            rep.verdict = Verdict::TotallyDisconnected;
        } else {
            rep.subcase = "U-a1>4";
            rep.verdict = Verdict::TotallyDisconnected;
        }
        return rep;
    }

    rep.taxonomy = Taxonomy::BicriticallyReal;
    const int s_fixed = fixed_disc_sign(P.a1, P.a2, P.a3);
    if (s_fixed < 0) {
        rep.subcase = "BR-0fp";
        rep.verdict = Verdict::TotallyDisconnected;
        return rep;
    }
    if (s_fixed == 0) {
        if (a1 == 5) {
            rep.subcase = "BR-1fp-a1=5";
            rep.verdict = Verdict::Connected;
        } else {
            rep.subcase = "BR-1fp";
            rep.verdict = Verdict::DisconnectedNotTotally;
        }
        return rep;
    }

    // two real fixed points; the zero trichotomy is checked first so the
    // boundary triples with a2^2 = 4 a1 a3 land in case II
    const int s_zero = zero_disc_sign(P.a1, P.a2, P.a3);
    if (s_zero == 0) {
        rep.subcase = "BR-2fp-caseII";
        rep.verdict = a1 <= 9 ? Verdict::Connected : Verdict::TotallyDisconnected;
        return rep;
    }
    if (s_zero > 0) {
        rep.subcase = "BR-2fp-caseIII";
        rep.verdict = Verdict::DisconnectedTotalityUnresolved;
        return rep;
    }

    const int t_super = superattracting_threshold_sign(P.a1, P.a2, P.a3);
    if (t_super < 0) {
        rep.subcase = "BR-2fp-caseI-(1)(a)";
        rep.verdict = Verdict::DisconnectedNotTotally;
        return rep;
    }
    if (t_super == 0) {
        rep.subcase = "BR-2fp-caseI-(1)(b)";
        rep.verdict = Verdict::DisconnectedNotTotally;
        return rep;
    }
    const int t_para = parabolic_threshold_sign(P.a1, P.a2, P.a3);
    if (t_para < 0) {
        rep.subcase = "BR-2fp-caseI-(1)(c)";
        rep.verdict = Verdict::DisconnectedNotTotally;
        return rep;
    }
    if (t_para == 0) {
        rep.subcase = "BR-2fp-caseI-(1)(d)";
        rep.verdict = a1 <= 7 ? Verdict::Connected : Verdict::DisconnectedNotTotally;
        return rep;
    }
    rep.subcase = "BR-2fp-caseI-(1)(e)";
    bool exceptional = (P.a1 == 7 && P.a2 == 9 && P.a3 == 3) ||
                       (P.a1 == 8 && P.a2 == 11 && P.a3 == 4);
    rep.verdict = exceptional ? Verdict::Connected : Verdict::DisconnectedTotalityUnresolved;
    return rep;
}

namespace {

nlohmann::json json_complex(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

std::string classification_json(const Cubic& P, const ClassificationReport& r) {
    nlohmann::json j;
    j["a1"] = P.a1;
    j["a2"] = P.a2;
    j["a3"] = P.a3;
    j["taxonomy"] = to_string(r.taxonomy);
    j["subcase"] = r.subcase;
    j["verdict"] = to_string(r.verdict);
    if (r.explicit_description) j["explicit_description"] = *r.explicit_description;
    j["attractor_composition"] = to_string(r.attractor_composition);
    j["realizable"] = to_string(r.realizable);
    j["evidence"] = to_string(r.evidence);
    const StructureReport& s = r.structure;
    j["structure"] = {
        {"c1", json_complex(s.c1)},
        {"c2", json_complex(s.c2)},
        {"delta1", json_complex(s.delta1)},
        {"delta2", json_complex(s.delta2)},
        {"multipliers",
         {{"at_zero", json_complex(s.mult_zero)},
          {"at_delta1", json_complex(s.mult_delta1)},
          {"at_delta2", json_complex(s.mult_delta2)}}},
        {"critical_disk",
         {{"center", json_complex(s.critical_disk.center)}, {"radius", s.critical_disk.radius}}},
    };
    return j.dump(2);
}

BuffScreen buff_screen(const Cubic& P) {
    // 0 is a fixed point with multiplier a1 and lies in the filled-in Julia
    // set; a multiplier above degree^2 = 9 forces a disconnected Julia set
    return P.a1 > 9 ? BuffScreen::ForcesDisconnected : BuffScreen::NoInformation;
}

namespace {

bool family_witness(const Cubic& P, FeasibilityResult& out) {
    if (P.a3 != 1) return false;
    std::int64_t a1 = P.a1, a2 = P.a2;
    if (a2 == 3 && a1 >= 3) {
        out.status = Feasibility::Feasible;
        out.reason = "complete graph minus one triangle";
        if (a1 <= kMaxVertices)
            out.witness = (a1 == 3) ? empty_graph(3) : make_family(Family::G1, static_cast<unsigned>(a1));
        return true;
    }
    if (a2 % 3 == 0) {
        std::int64_t n = a2 / 3;
        if (n >= 2 && a1 == 3 * n * n) {
            out.status = Feasibility::Feasible;
            out.reason = "star-pruned complete graph family (unicritical)";
            if (a1 <= kMaxVertices) out.witness = make_family(Family::G2, static_cast<unsigned>(n));
            return true;
        }
    }
    if (a2 % 2 == 0) {
        std::int64_t n = a2 / 2;
        if (n >= 2 && a1 == n * n + 1) {
            out.status = Feasibility::Feasible;
            out.reason = "star-pruned complete graph family (parabolic)";
            if (a1 <= kMaxVertices) out.witness = make_family(Family::G3, static_cast<unsigned>(n));
            return true;
        }
    }
    return false;
}

}  // namespace

FeasibilityResult feasibility(const Cubic& P, bool allow_witness_search) {
    std::int64_t a1 = P.a1, a2 = P.a2, a3 = P.a3;
    FeasibilityResult res;
    auto infeasible = [&](std::string why) {
        res.status = Feasibility::Infeasible;
        res.reason = std::move(why);
        return res;
    };

    if (a1 < 3 || a2 < 3 || a3 < 1) return infeasible("below the minimal counts for independence number 3");
    if (a2 > a1 * (a1 - 1) / 2) return infeasible("a2 exceeds the number of vertex pairs");
    if (a3 > a1 * (a1 - 1) * (a1 - 2) / 6) return infeasible("a3 exceeds the number of vertex triples");
    if (a1 == 3 && !(a2 == 3 && a3 == 1)) return infeasible("a1 = 3 forces (a2, a3) = (3, 1)");
    if (a1 >= 4 && 3 * a2 > a1 * a1) return infeasible("a2 exceeds the Turan bound a1^2/3");
    switch (a1) {
        case 4:
            if (!((a2 == 3 && a3 == 1) || (a2 == 4 && a3 == 1) || (a2 == 5 && a3 == 2)))
                return infeasible("a1 = 4 admits only (a2, a3) in {(3,1), (4,1), (5,2)}");
            break;
        case 5:
            if (a2 == 8 && a3 != 4) return infeasible("a1 = 5, a2 = 8 forces a3 = 4");
            break;
        case 6:
            if (a2 == 12 && a3 != 8) return infeasible("a1 = 6, a2 = 12 forces a3 = 8");
            break;
        case 7:
            if (a2 == 16 && a3 != 12) return infeasible("a1 = 7, a2 = 16 forces a3 = 12");
            break;
        case 8:
            if (a2 == 21 && a3 != 18) return infeasible("a1 = 8, a2 = 21 forces a3 = 18");
            if (a2 == 20 && a3 != 15 && a3 != 16)
                return infeasible("a1 = 8, a2 = 20 forces a3 in {15, 16}");
            break;
        default: break;
    }

    if (family_witness(P, res)) return res;

    if (allow_witness_search && a1 <= 7) {
        if (auto g = find_witness(a1, a2, a3)) {
            res.status = Feasibility::Feasible;
            res.reason = "witness found by exhaustive search";
            res.witness = std::move(g);
        } else {
            res.status = Feasibility::Infeasible;
            res.reason = "exhausted all graphs on a1 vertices";
        }
        return res;
    }

    res.status = Feasibility::Unknown;
    res.reason = "no exclusion rule fires and no witness is known";
    return res;
}

std::array<std::vector<Cubic>, 5> window_catalog() {
    std::array<std::vector<Cubic>, 5> groups;
    for (std::int64_t a1 = 4; a1 <= 8; ++a1) {
        std::int64_t a2_max = a1 * (a1 - 1) / 2;
        std::int64_t a3_max = a1 * (a1 - 1) * (a1 - 2) / 6;
        for (std::int64_t a2 = 3; a2 <= a2_max; ++a2)
            for (std::int64_t a3 = 1; a3 <= a3_max; ++a3) {
                if (fixed_disc_sign(a1, a2, a3) <= 0) continue;  // 4 a3 (a1-1) < a2^2
                // a2^2 < 4 a1 a3, except for the boundary triple that also
                // sits on the parabolic threshold ((4,4,1); it belongs to the
                // fourth group even though the zero discriminant vanishes)
                int zd = zero_disc_sign(a1, a2, a3);
                if (zd > 0) continue;
                if (zd == 0 && parabolic_threshold_sign(a1, a2, a3) != 0) continue;
                Cubic p(a1, a2, a3);
                if (feasibility(p, /*allow_witness_search=*/false).status == Feasibility::Infeasible)
                    continue;
                int t_super = superattracting_threshold_sign(a1, a2, a3);
                int t_para = parabolic_threshold_sign(a1, a2, a3);
                unsigned group = t_super < 0    ? 0
                                 : t_super == 0 ? 1
                                 : t_para < 0   ? 2
                                 : t_para == 0  ? 3
                                                : 4;
                groups[group].push_back(p);
            }
    }
    return groups;
}

namespace {

struct ExpectedComplexRow {
    std::int64_t a3, a2;
    double c_re, c_im;    // exact closed forms
    double pc_re, pc_im;  // exact closed forms
    double p2c_re, p2c_im;  // printed to two decimals
};

struct ExpectedRealRow {
    std::int64_t a1, a2, a3;
    double delta1;   // exact
    double c2;       // exact closed form
    double pc2;      // printed to three decimals unless noted
    double pc2_tol;
};

constexpr double kExactTol = 1e-12;
constexpr double kTwoDecTol = 0.006;
constexpr double kThreeDecTol = 6e-4;

TableRow check_complex_row(std::int64_t a1, const ExpectedComplexRow& e) {
    Cubic p(a1, e.a2, e.a3);
    StructureReport s = structure_report(p);
    Complex c = s.c2;  // the critical point with positive imaginary part
    Complex pc = evaluate(p, c);
    Complex p2c = evaluate(p, pc);
    TableRow row{p, {}, true};
    row.cells.push_back({"c", c, {e.c_re, e.c_im}, kExactTol, false});
    row.cells.push_back({"P(c)", pc, {e.pc_re, e.pc_im}, kExactTol, false});
    row.cells.push_back({"P^2(c)", p2c, {e.p2c_re, e.p2c_im}, kTwoDecTol, false});
    for (auto& cell : row.cells) {
        cell.pass = std::abs(cell.computed - cell.expected) <= cell.tol;
        row.pass = row.pass && cell.pass;
    }
    return row;
}

TableRow check_real_row(const ExpectedRealRow& e) {
    Cubic p(e.a1, e.a2, e.a3);
    StructureReport s = structure_report(p);
    Complex pc2 = evaluate(p, s.c2);
    TableRow row{p, {}, true};
    row.cells.push_back({"delta1", s.delta1, {e.delta1, 0.0}, kExactTol, false});
    row.cells.push_back({"c2", s.c2, {e.c2, 0.0}, kExactTol, false});
    row.cells.push_back({"P(c2)", pc2, {e.pc2, 0.0}, e.pc2_tol, false});
    for (auto& cell : row.cells) {
        cell.pass = std::abs(cell.computed - cell.expected) <= cell.tol;
        row.pass = row.pass && cell.pass;
    }
    return row;
}

}  // namespace

TableReport reproduce_table(int id) {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s7 = std::sqrt(7.0);
    const double s11 = std::sqrt(11.0), s13 = std::sqrt(13.0), s22 = std::sqrt(22.0);
    const double s33 = std::sqrt(33.0), s40 = std::sqrt(40.0), s60 = std::sqrt(60.0);
    const double s73 = std::sqrt(73.0);

    TableReport rep{id, {}, true};
    switch (id) {
        case 1: {
            const ExpectedComplexRow rows[] = {
                {2, 5, -5.0 / 6, s5 / 6, -50.0 / 27, 5 * s5 / 54, -4.55, 1.44},
                {3, 6, -2.0 / 3, 1.0 / 3, -14.0 / 9, 2.0 / 9, -4.16, 1.77},
                {4, 7, -7.0 / 12, s11 / 12, -287.0 / 216, 11 * s11 / 216, -3.41, 1.26},
            };
            for (const auto& r : rows) rep.rows.push_back(check_complex_row(5, r));
            break;
        }
        case 2: {
            const ExpectedComplexRow rows[] = {
                {1, 4, -4.0 / 3, s2 / 3, -88.0 / 27, 4 * s2 / 27, -11.43, 2.46},
                {3, 7, -7.0 / 9, s5 / 9, -448.0 / 243, 10 * s5 / 243, -5.99, 0.99},
                {4, 8, -2.0 / 3, s2 / 6, -44.0 / 27, 2 * s2 / 27, -5.72, 1.23},
                {5, 9, -3.0 / 5, 1.0 / 5, -972.0 / 675, 2.0 / 25, -4.83, 0.89},
                {6, 10, -5.0 / 9, s2 / 9, -310.0 / 243, 8 * s2 / 243, -3.81, 0.45},
                {7, 11, -11.0 / 21, s5 / 21, -1496.0 / 1323, 10 * s5 / 1323, -2.84, 0.13},
            };
            for (const auto& r : rows) rep.rows.push_back(check_complex_row(6, r));
            break;
        }
        case 3: {
            const ExpectedRealRow rows[] = {
                {6, 11, 6, -1.0, (-11 + s13) / 18, -1.024, kThreeDecTol},
                {7, 13, 7, -1.0, (-13 + s22) / 21, -1.168, kThreeDecTol},
                {8, 15, 8, -1.0, (-15 + s33) / 24, -1.313, kThreeDecTol},
            };
            for (const auto& r : rows) rep.rows.push_back(check_real_row(r));
            break;
        }
        case 4: {
            const ExpectedRealRow rows[] = {
                {7, 7, 2, -2.0, (-7 + s7) / 6, -2.158, kThreeDecTol},
                {7, 14, 8, -1.0, (-7 + s7) / 12, -1.079, kThreeDecTol},
                {8, 16, 9, -1.0, (-16 + s40) / 27, -1.226, kThreeDecTol},
            };
            for (const auto& r : rows) rep.rows.push_back(check_real_row(r));
            break;
        }
        case 5: {
            const ExpectedRealRow rows[] = {
                {7, 9, 3, -2.0, (-3 + s2) / 3, -1.629, kThreeDecTol},
                {8, 11, 4, -1.75, -0.5, -1.75, kExactTol},
                {8, 17, 10, -1.0, -1.0 / 3, -1.148, kThreeDecTol},
                {8, 18, 11, -1.0, (-18 + s60) / 33, -1.078, kThreeDecTol},
                {8, 19, 12, -1.0, (-19 + s73) / 36, -1.015, kThreeDecTol},
            };
            for (const auto& r : rows) rep.rows.push_back(check_real_row(r));
            break;
        }
        default:
            throw std::invalid_argument("table id must be in [1, 5]");
    }
    for (const auto& row : rep.rows) rep.pass = rep.pass && row.pass;
    return rep;
}

}  // namespace indy3
