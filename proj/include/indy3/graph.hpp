#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indy3 {

inline constexpr unsigned kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices, one adjacency bitset per
/// vertex. Adjacency is kept symmetric and loop-free.
class Graph {
public:
    explicit Graph(unsigned n);

    unsigned size() const { return n_; }
    std::uint64_t neighbors(unsigned v) const { return adj_[v]; }
    bool adjacent(unsigned u, unsigned v) const { return (adj_[u] >> v) & 1u; }
    unsigned edge_count() const;

    void add_edge(unsigned u, unsigned v);
    void remove_edge(unsigned u, unsigned v);

private:
    unsigned n_;
    std::vector<std::uint64_t> adj_;
};

Graph empty_graph(unsigned n);
Graph complete_graph(unsigned n);

/// Number of k-element independent sets for k = 1..d, with d the independence
/// number. coeffs[k-1] is the count of k-independent sets; a1 = vertex count.
struct IndependenceProfile {
    std::vector<std::uint64_t> coeffs;
    unsigned d = 0;

    std::uint64_t a(unsigned k) const { return (k >= 1 && k <= d) ? coeffs[k - 1] : 0; }
    bool operator==(const IndependenceProfile&) const = default;
};

/// Text format: first non-comment line is the vertex count n, each following
/// line one edge "u v" with 0-based indices, '#' starts a comment line.
/// Duplicate edges are deduplicated with a warning appended to `warnings`.
/// Throws std::invalid_argument on malformed input, indices >= n, or n > 64.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
Graph load_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
std::string format_graph(const Graph& g, std::string_view comment = {});

/// Exact count of independent sets by size, by recursive subset extension with
/// bitset pruning. Cost is proportional to the number of independent sets.
IndependenceProfile independence_profile(const Graph& g);

/// Lexicographic product: vertex (a, x) has index a * h.size() + x, and
/// (a, x) ~ (b, y) iff a ~ b in g, or a = b and x ~ y in h.
/// Requires g.size() * h.size() <= 64.
Graph lexicographic_product(const Graph& g, const Graph& h);

enum class Family { G1, G2, G3 };

/// Accepts "G1" / "g1" etc.
Family parse_family(std::string_view name);

/// Explicit families with a single 3-independent set and growing attractors:
///   G1(n), n > 3:  K_n minus the three edges of a triangle; profile (n, 3, 1).
///   G2(n), n > 1:  K_{3n^2} minus a triangle, minus the 3n-3 edges from one
///                  further vertex to the next 3n-3 vertices; profile (3n^2, 3n, 1).
///   G3(n), n > 1:  K_{n^2+1} minus a triangle, minus 2n-3 such edges;
///                  profile (n^2+1, 2n, 1).
Graph make_family(Family f, unsigned n);

/// Coefficients (constant term dropped) of I(I(z) - 1), where I is the
/// independence polynomial 1 + sum coeffs[k-1] z^k. Exact integer arithmetic;
/// throws std::overflow_error if a coefficient does not fit.
std::vector<std::uint64_t> composed_profile(const IndependenceProfile& p);

}  // namespace indy3
