#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "indy3/cubic.hpp"
#include "indy3/graph.hpp"

namespace indy3 {

enum class Taxonomy { BicriticallyNonReal, Unicritical, BicriticallyReal };

enum class Verdict {
    Connected,
    TotallyDisconnected,
    DisconnectedNotTotally,
    DisconnectedTotalityUnresolved,  // disconnected; totality open in general
    ExplicitSet,                     // the attractor has a closed-form description
};

enum class AttractorComposition { JuliaOnly, JuliaPlusRootUnion };
enum class Realizable { Yes, No, Unknown };

const char* to_string(Taxonomy t);
const char* to_string(Verdict v);
const char* to_string(AttractorComposition c);
const char* to_string(Realizable r);

struct ClassificationReport {
    Taxonomy taxonomy;
    std::string subcase;  // decision path, e.g. "BR-2fp-caseI-(1)(e)"
    Verdict verdict;
    std::optional<std::string> explicit_description;
    AttractorComposition attractor_composition;
    Realizable realizable;
    CriticalOrbitEvidence evidence;
    StructureReport structure;
};

/// Exact decision procedure for the connectedness of the independence
/// attractor of P. All branch comparisons are integer-exact; floating point
/// enters only through the attached structure/evidence fields.
/// Requires a1 >= 3, a2 >= 3, a3 >= 1.
ClassificationReport classify(const Cubic& P, unsigned max_iter = 1000);

/// The report as JSON (schema: taxonomy, subcase, verdict,
/// explicit_description?, attractor_composition, realizable, evidence,
/// structure{c1, c2, delta1, delta2, multipliers, critical_disk}).
std::string classification_json(const Cubic& P, const ClassificationReport& r);

enum class BuffScreen { ForcesDisconnected, NoInformation };

/// The derivative bound on a connected filled-in Julia set: a fixed point of
/// multiplier a1 > 9 = 3^2 rules out connectedness.
BuffScreen buff_screen(const Cubic& P);

enum class Feasibility { Feasible, Infeasible, Unknown };

struct FeasibilityResult {
    Feasibility status = Feasibility::Unknown;
    std::string reason;
    std::optional<Graph> witness;
};

/// Coefficient feasibility for a graph with independence number 3: the
/// counting bounds, the Turan bound a2 <= a1^2/3 for a1 >= 4, the per-a1
/// exclusion rules for a1 <= 8, and constructive family witnesses. When
/// allow_witness_search is set and a1 <= 7 an exhaustive search settles the
/// remaining cases; otherwise they stay Unknown.
FeasibilityResult feasibility(const Cubic& P, bool allow_witness_search = true);

/// The feasible triples with 4 <= a1 <= 8 in the window
/// 4 a3 (a1-1) < a2^2 < 4 a1 a3, grouped by the multiplier sub-case of the
/// larger fixed point (the five caseI branches (1)(a)..(1)(e)).
std::array<std::vector<Cubic>, 5> window_catalog();

/// Reference-table reproduction. Tables 1-2 list c, P(c), P^2(c) for the
/// bicritically non-real triples with a1 = 5 and 6; tables 3-5 list delta1,
/// c2, P(c2) for the caseI sub-case triples. Expected values are frozen at
/// their printed precision (exact cells at 1e-12, two decimals at 0.006,
/// three decimals at 6e-4).
struct TableCell {
    std::string label;
    Complex computed;
    Complex expected;
    double tol;
    bool pass;
};

struct TableRow {
    Cubic cubic;
    std::vector<TableCell> cells;
    bool pass;
};

struct TableReport {
    int id;
    std::vector<TableRow> rows;
    bool pass;
};

TableReport reproduce_table(int id);

}  // namespace indy3
