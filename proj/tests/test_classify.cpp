#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <tuple>

#include "indy3/classify.hpp"
#include "indy3/exact.hpp"
#include "indy3/rng.hpp"

using namespace indy3;

namespace {

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::set<Triple> as_set(const std::vector<Cubic>& v) {
    std::set<Triple> s;
    for (const Cubic& c : v) s.insert({c.a1, c.a2, c.a3});
    return s;
}

}  // namespace

TEST_CASE("classify: named examples across the branches") {
    ClassificationReport r431 = classify(Cubic(4, 3, 1));
    CHECK(r431.taxonomy == Taxonomy::BicriticallyNonReal);
    CHECK(r431.verdict == Verdict::TotallyDisconnected);
    CHECK(r431.evidence == CriticalOrbitEvidence::BothEscape);

    ClassificationReport r331 = classify(Cubic(3, 3, 1));
    CHECK(r331.taxonomy == Taxonomy::Unicritical);
    CHECK(r331.verdict == Verdict::ExplicitSet);
    REQUIRE(r331.explicit_description.has_value());
    CHECK(r331.explicit_description->find("|z+1| = 1") != std::string::npos);
    CHECK(r331.attractor_composition == AttractorComposition::JuliaPlusRootUnion);
    CHECK(r331.realizable == Realizable::Yes);

    ClassificationReport r584 = classify(Cubic(5, 8, 4));
    CHECK(r584.subcase == "BR-1fp-a1=5");
    CHECK(r584.verdict == Verdict::Connected);
    CHECK(r584.realizable == Realizable::Yes);

    ClassificationReport r793 = classify(Cubic(7, 9, 3));
    CHECK(r793.subcase == "BR-2fp-caseI-(1)(e)");
    CHECK(r793.verdict == Verdict::Connected);

    ClassificationReport r935 = classify(Cubic(9, 13, 5));
    CHECK(r935.verdict == Verdict::DisconnectedTotalityUnresolved);
    CHECK(r935.evidence == CriticalOrbitEvidence::BothEscape);

    ClassificationReport r957 = classify(Cubic(9, 15, 7));
    CHECK(r957.attractor_composition == AttractorComposition::JuliaPlusRootUnion);
    CHECK(r957.subcase == "BR-2fp-caseI-(1)(b)");

    CHECK(classify(Cubic(12, 42, 40)).attractor_composition == AttractorComposition::JuliaOnly);
    CHECK_THROWS_AS(classify(Cubic(1, 1, 1, true)), std::invalid_argument);
}

TEST_CASE("classify: taxonomy is decided by the exact discriminant sign") {
    Xorshift64Star rng(101);
    for (int i = 0; i < 300; ++i) {
        std::int64_t a1 = 3 + rng.below(20);
        std::int64_t a2 = 3 + rng.below(40);
        std::int64_t a3 = 1 + rng.below(40);
        ClassificationReport r = classify(Cubic(a1, a2, a3));
        int s = crit_disc_sign(a1, a2, a3);
        Taxonomy want = s < 0    ? Taxonomy::BicriticallyNonReal
                        : s == 0 ? Taxonomy::Unicritical
                                 : Taxonomy::BicriticallyReal;
        CHECK(r.taxonomy == want);
        // composition flag is the exact coefficient identity
        bool root_union = (a2 == 2 * a1 - 3 && a3 == a1 - 2);
        CHECK((r.attractor_composition == AttractorComposition::JuliaPlusRootUnion) == root_union);
    }
}

TEST_CASE("classify: boundary triple (4,4,1) lands in case II, Connected") {
    ClassificationReport r = classify(Cubic(4, 4, 1));
    CHECK(r.subcase == "BR-2fp-caseII");
    CHECK(r.verdict == Verdict::Connected);
}

TEST_CASE("classify: case II verdict splits at a1 = 9") {
    CHECK(classify(Cubic(9, 18, 9)).verdict == Verdict::Connected);
    CHECK(classify(Cubic(9, 18, 9)).subcase == "BR-2fp-caseII");
    CHECK(classify(Cubic(10, 20, 10)).verdict == Verdict::TotallyDisconnected);
    CHECK(classify(Cubic(7, 14, 7)).verdict == Verdict::Connected);
}

TEST_CASE("buff_screen fires exactly above multiplier 9") {
    CHECK(buff_screen(Cubic(10, 20, 10)) == BuffScreen::ForcesDisconnected);
    CHECK(buff_screen(Cubic(9, 18, 9)) == BuffScreen::NoInformation);
    CHECK(buff_screen(Cubic(4, 3, 1)) == BuffScreen::NoInformation);
}

TEST_CASE("feasibility: rule hits and witness escalation") {
    FeasibilityResult f451 = feasibility(Cubic(4, 5, 1));
    CHECK(f451.status == Feasibility::Infeasible);

    FeasibilityResult f584 = feasibility(Cubic(5, 8, 4));
    REQUIRE(f584.status == Feasibility::Feasible);
    REQUIRE(f584.witness.has_value());
    const Graph& w = *f584.witness;
    CHECK(independence_profile(w).coeffs == std::vector<std::uint64_t>{5, 8, 4});
    // two disjoint edges plus an isolated vertex (up to labeling)
    CHECK(w.edge_count() == 2);
    unsigned touched = 0;
    for (unsigned v = 0; v < w.size(); ++v) touched += w.neighbors(v) != 0;
    CHECK(touched == 4);

    CHECK(feasibility(Cubic(8, 26, 24)).status == Feasibility::Infeasible);
    CHECK(feasibility(Cubic(8, 26, 24)).reason.find("Turan") != std::string::npos);

    // family-pattern witnesses
    CHECK(feasibility(Cubic(12, 6, 1)).status == Feasibility::Feasible);
    CHECK(feasibility(Cubic(26, 10, 1)).status == Feasibility::Feasible);  // G3(5)
    CHECK(feasibility(Cubic(20, 3, 1)).status == Feasibility::Feasible);   // G1(20)

    // a1 = 8, no rule, no search by default
    CHECK(feasibility(Cubic(8, 11, 4), false).status == Feasibility::Unknown);

    // search settles a1 <= 7 both ways
    CHECK(feasibility(Cubic(6, 10, 5)).status == Feasibility::Feasible);
    CHECK(feasibility(Cubic(7, 12, 30)).status == Feasibility::Infeasible);
}

TEST_CASE("window catalog: exactly the 23 triples in their five groups") {
    auto groups = window_catalog();
    std::size_t total = 0;
    for (const auto& g : groups) total += g.size();
    CHECK(total == 23);

    CHECK(as_set(groups[0]) == std::set<Triple>{{6, 11, 6}, {7, 13, 7}, {8, 15, 8}});
    CHECK(as_set(groups[1]) ==
          std::set<Triple>{{4, 5, 2}, {5, 7, 3}, {6, 9, 4}, {7, 11, 5}, {8, 13, 6}});
    CHECK(as_set(groups[2]) == std::set<Triple>{{7, 7, 2}, {7, 14, 8}, {8, 16, 9}});
    CHECK(as_set(groups[3]) == std::set<Triple>{{4, 4, 1},
                                                {5, 6, 2},
                                                {6, 8, 3},
                                                {7, 5, 1},
                                                {7, 10, 4},
                                                {7, 15, 9},
                                                {8, 12, 5}});
    CHECK(as_set(groups[4]) ==
          std::set<Triple>{{7, 9, 3}, {8, 11, 4}, {8, 17, 10}, {8, 18, 11}, {8, 19, 12}});
}

TEST_CASE("window catalog: connectedness direction matches sign(P(c2) - delta1)") {
    auto groups = window_catalog();
    for (unsigned gi = 0; gi < 5; ++gi) {
        for (const Cubic& p : groups[gi]) {
            StructureReport s = structure_report(p);
            double pc2 = evaluate(p, s.c2).real();
            double d1 = s.delta1.real();
            ClassificationReport r = classify(p);
            bool connected_side = d1 <= pc2 + 1e-9;
            // the attractor adds root levels on top of the Julia set, so
            // compare against the Julia-set connectivity of the branch
            bool julia_connected =
                r.verdict == Verdict::Connected ||
                (r.subcase == "BR-2fp-caseI-(1)(b)" && p.a1 <= 6);
            CHECK(julia_connected == connected_side);
        }
    }
}

TEST_CASE("window catalog: multiplier of delta2 sits in the sub-case range") {
    auto groups = window_catalog();
    for (const Cubic& p : groups[0]) {  // (1)(a): attracting, delta2 < c1
        StructureReport s = structure_report(p);
        CHECK(std::abs(s.mult_delta2) < 1.0);
        CHECK(s.delta2.real() < s.c1.real());
    }
    for (const Cubic& p : groups[1]) {  // (1)(b): super-attracting, delta2 = c1
        StructureReport s = structure_report(p);
        CHECK(std::abs(s.mult_delta2) <= 1e-9);
        CHECK(std::abs(s.delta2 - s.c1) <= 1e-9);
    }
    for (const Cubic& p : groups[2]) {  // (1)(c): attracting, delta2 > c1
        StructureReport s = structure_report(p);
        CHECK(std::abs(s.mult_delta2) < 1.0);
        CHECK(s.delta2.real() > s.c1.real());
    }
    for (const Cubic& p : groups[3]) {  // (1)(d): parabolic with multiplier -1
        StructureReport s = structure_report(p);
        CHECK(std::abs(s.mult_delta2 - Complex(-1.0)) <= 1e-9);
        REQUIRE(s.delta_quantity.has_value());
        CHECK(*s.delta_quantity == doctest::Approx(2.0).epsilon(1e-9));
    }
    for (const Cubic& p : groups[4]) {  // (1)(e): repelling
        StructureReport s = structure_report(p);
        CHECK(std::abs(s.mult_delta2) > 1.0);
        CHECK(s.delta2.real() > s.c1.real());
    }
}

TEST_CASE("verdicts are consistent with critical-orbit evidence") {
    auto groups = window_catalog();
    std::vector<Cubic> pool;
    for (const auto& g : groups) pool.insert(pool.end(), g.begin(), g.end());

    // bicritically non-real: the finitely many feasible small triples...
    for (Cubic p : {Cubic(4, 3, 1), Cubic(5, 5, 2), Cubic(5, 6, 3), Cubic(5, 7, 4), Cubic(6, 4, 1),
                    Cubic(6, 7, 3), Cubic(6, 8, 4), Cubic(6, 9, 5), Cubic(6, 10, 6),
                    Cubic(6, 11, 7)})
        pool.push_back(p);
    // ...plus larger ones, where escape of the critical value is unconditional
    Xorshift64Star rng(311);
    int added = 0;
    while (added < 50) {
        std::int64_t a1 = 7 + rng.below(6);
        std::int64_t a2 = 3 + rng.below(20);
        std::int64_t a3 = 1 + rng.below(30);
        if (crit_disc_sign(a1, a2, a3) >= 0) continue;
        pool.push_back(Cubic(a1, a2, a3));
        ++added;
    }
    // unicritical family: (3 m^2, 3 m k, k^2) always satisfies a2^2 = 3 a1 a3
    added = 0;
    while (added < 50) {
        std::int64_t m = 2 + rng.below(5);
        std::int64_t k = 1 + rng.below(6);
        pool.push_back(Cubic(3 * m * m, 3 * m * k, k * k));
        ++added;
    }
    // bicritically real with non-real fixed points: totally disconnected stratum
    added = 0;
    while (added < 50) {
        std::int64_t a1 = 5 + rng.below(8);
        std::int64_t a2 = 3 + rng.below(25);
        std::int64_t a3 = 1 + rng.below(40);
        if (crit_disc_sign(a1, a2, a3) <= 0) continue;
        if (fixed_disc_sign(a1, a2, a3) >= 0) continue;
        pool.push_back(Cubic(a1, a2, a3));
        ++added;
    }

    for (const Cubic& p : pool) {
        ClassificationReport r = classify(p);
        if (r.verdict == Verdict::Connected) CHECK(r.evidence != CriticalOrbitEvidence::BothEscape);
        if (r.verdict == Verdict::TotallyDisconnected)
            CHECK(r.evidence == CriticalOrbitEvidence::BothEscape);
    }

    // In case II above a1 = 9 the smaller critical point maps onto the
    // repelling fixed point 0 and stays bounded: the evidence is Mixed even
    // though the set is totally disconnected.
    for (std::int64_t j : {1, 2, 3}) {
        ClassificationReport r = classify(Cubic(10, 20 * j, 10 * j * j));
        CHECK(r.verdict == Verdict::TotallyDisconnected);
        CHECK(r.evidence == CriticalOrbitEvidence::Mixed);
    }
}

TEST_CASE("reproduce_table: all five tables pass") {
    for (int id = 1; id <= 5; ++id) {
        TableReport rep = reproduce_table(id);
        INFO("table ", id);
        CHECK(rep.pass);
        for (const auto& row : rep.rows)
            for (const auto& cell : row.cells) {
                INFO("row (", row.cubic.a1, ",", row.cubic.a2, ",", row.cubic.a3, ") cell ",
                     cell.label, " computed ", cell.computed.real(), "+", cell.computed.imag(),
                     "i expected ", cell.expected.real(), "+", cell.expected.imag(), "i");
                CHECK(cell.pass);
            }
    }
    CHECK_THROWS_AS(reproduce_table(6), std::invalid_argument);
}

TEST_CASE("classification_json carries the schema fields") {
    Cubic p(9, 13, 5);
    std::string j = classification_json(p, classify(p));
    for (const char* key :
         {"taxonomy", "subcase", "verdict", "attractor_composition", "realizable", "evidence",
          "structure", "c1", "c2", "delta1", "delta2", "multipliers", "critical_disk"})
        CHECK(j.find(key) != std::string::npos);
}
