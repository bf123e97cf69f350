#include "indy3/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

#include "indy3/parallel.hpp"

namespace indy3 {

namespace {

unsigned edge_index(unsigned n, unsigned u, unsigned v) {
    // pairs (u, v), u < v, in lexicographic order
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

struct SubsetMasks {
    std::vector<std::uint32_t> triples;  // 3 edge bits per vertex triple
    std::vector<std::uint32_t> quads;    // 6 edge bits per vertex quadruple
};

SubsetMasks subset_masks(unsigned n) {
    SubsetMasks m;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned k = j + 1; k < n; ++k) {
                std::uint32_t mask = (1u << edge_index(n, i, j)) | (1u << edge_index(n, i, k)) |
                                     (1u << edge_index(n, j, k));
                m.triples.push_back(mask);
                for (unsigned l = k + 1; l < n; ++l)
                    m.quads.push_back(mask | (1u << edge_index(n, i, l)) |
                                      (1u << edge_index(n, j, l)) | (1u << edge_index(n, k, l)));
            }
    return m;
}

Graph graph_from_mask(unsigned n, std::uint32_t mask) {
    Graph g(n);
    for (unsigned u = 0; u < n; ++u)
        for (unsigned v = u + 1; v < n; ++v)
            if (mask >> edge_index(n, u, v) & 1u) g.add_edge(u, v);
    return g;
}

}  // namespace

const TripleCatalog::Row* TripleCatalog::find(std::uint64_t a2, std::uint64_t a3) const {
    for (const Row& r : rows)
        if (r.a2 == a2 && r.a3 == a3) return &r;
    return nullptr;
}

std::uint64_t TripleCatalog::max_a2() const {
    std::uint64_t m = 0;
    for (const Row& r : rows) m = std::max(m, r.a2);
    return m;
}

TripleCatalog enumerate_realizable_triples(unsigned n, bool include_n8, unsigned threads) {
    if (n < 3 || n > 8) throw std::invalid_argument("n must be in [3, 8]");
    if (n == 8 && !include_n8)
        throw std::invalid_argument("n = 8 scans 2^28 graphs and must be enabled explicitly");

    const unsigned edges = n * (n - 1) / 2;
    const SubsetMasks masks = subset_masks(n);
    const std::uint64_t total = 1ull << edges;
    const unsigned workers = (n == 8) ? resolve_threads(threads) : 1;

    // counts[a2][a3] of labeled graphs, accumulated per worker and merged
    const unsigned a2_cap = edges + 1;
    const unsigned a3_cap = n * (n - 1) * (n - 2) / 6 + 1;
    std::vector<std::vector<std::uint64_t>> tallies(workers);
    for (auto& t : tallies) t.assign(a2_cap * a3_cap, 0);

    auto scan = [&](unsigned worker) {
        std::uint64_t begin = total / workers * worker;
        std::uint64_t end = (worker + 1 == workers) ? total : total / workers * (worker + 1);
        std::vector<std::uint64_t>& tally = tallies[worker];
        for (std::uint64_t g = begin; g < end; ++g) {
            const std::uint32_t mask = static_cast<std::uint32_t>(g);
            bool has_quad = false;
            for (std::uint32_t qm : masks.quads)
                if ((mask & qm) == 0) {
                    has_quad = true;
                    break;
                }
            if (has_quad) continue;
            unsigned a3 = 0;
            for (std::uint32_t tm : masks.triples)
                if ((mask & tm) == 0) ++a3;
            if (a3 == 0) continue;
            unsigned a2 = edges - static_cast<unsigned>(std::popcount(mask));
            ++tally[a2 * a3_cap + a3];
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    TripleCatalog cat;
    cat.n = n;
    for (unsigned a2 = 0; a2 < a2_cap; ++a2)
        for (unsigned a3 = 0; a3 < a3_cap; ++a3) {
            std::uint64_t count = 0;
            for (const auto& t : tallies) count += t[a2 * a3_cap + a3];
            if (count) cat.rows.push_back({a2, a3, count});
        }
    return cat;
}

std::optional<Graph> find_witness(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    if (a1 < 3 || a1 > 8) throw std::invalid_argument("witness search requires 3 <= a1 <= 8");
    if (a2 < 0 || a3 < 1) return std::nullopt;
    const unsigned n = static_cast<unsigned>(a1);
    const unsigned edges = n * (n - 1) / 2;
    if (a2 > edges) return std::nullopt;
    const unsigned want = edges - static_cast<unsigned>(a2);  // 2-independent sets are non-edges
    const SubsetMasks masks = subset_masks(n);

    auto matches = [&](std::uint32_t mask) {
        for (std::uint32_t qm : masks.quads)
            if ((mask & qm) == 0) return false;
        std::uint32_t count = 0;
        for (std::uint32_t tm : masks.triples)
            if ((mask & tm) == 0) ++count;
        return count == a3;
    };

    if (want == 0) return matches(0) ? std::optional<Graph>(graph_from_mask(n, 0)) : std::nullopt;

    // Gosper's hack over all edge sets of the forced size, ascending mask order
    std::uint64_t v = (1ull << want) - 1;
    const std::uint64_t limit = 1ull << edges;
    while (v < limit) {
        if (matches(static_cast<std::uint32_t>(v)))
            return graph_from_mask(n, static_cast<std::uint32_t>(v));
        std::uint64_t c = v & -v;
        std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return std::nullopt;
}

void write_catalog_csv(const TripleCatalog& c, std::ostream& out) {
    out << "n,a2,a3,labeled_count\n";
    for (const auto& r : c.rows)
        out << c.n << "," << r.a2 << "," << r.a3 << "," << r.labeled_count << "\n";
}

}  // namespace indy3
