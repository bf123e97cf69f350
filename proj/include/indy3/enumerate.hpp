#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "indy3/graph.hpp"

namespace indy3 {

/// All (a2, a3) pairs realized by graphs on n vertices with independence
/// number exactly 3, with the number of labeled graphs per pair.
struct TripleCatalog {
    unsigned n = 0;

    struct Row {
        std::uint64_t a2, a3, labeled_count;
    };

    std::vector<Row> rows;  // sorted by (a2, a3)

    const Row* find(std::uint64_t a2, std::uint64_t a3) const;
    std::uint64_t max_a2() const;
};

/// Exhausts all 2^C(n,2) labeled edge sets. n = 8 (2^28 graphs) must be opted
/// into with include_n8 and is partitioned over `threads` workers (0 = all
/// hardware threads).
TripleCatalog enumerate_realizable_triples(unsigned n, bool include_n8 = false,
                                           unsigned threads = 0);

/// First labeled graph on a1 vertices whose profile is (a1, a2, a3), scanning
/// the edge sets of the forced size C(a1,2) - a2 in mask order. Exhaustive:
/// nullopt proves no such graph exists. Requires 3 <= a1 <= 8.
std::optional<Graph> find_witness(std::int64_t a1, std::int64_t a2, std::int64_t a3);

/// CSV "n,a2,a3,labeled_count".
void write_catalog_csv(const TripleCatalog& c, std::ostream& out);

}  // namespace indy3
