#include "indy3/graph.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace indy3 {

Graph::Graph(unsigned n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, 64], got " + std::to_string(n));
}

unsigned Graph::edge_count() const {
    unsigned total = 0;
    for (std::uint64_t row : adj_) total += static_cast<unsigned>(std::popcount(row));
    return total / 2;
}

void Graph::add_edge(unsigned u, unsigned v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(unsigned u, unsigned v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

Graph empty_graph(unsigned n) { return Graph(n); }

Graph complete_graph(unsigned n) {
    Graph g(n);
    for (unsigned u = 0; u < n; ++u)
        for (unsigned v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1;
    unsigned lineno = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected a positive vertex count");
            if (n > static_cast<long>(kMaxVertices))
                throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds 64");
            std::string tail;
            if (ls >> tail)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": trailing tokens after vertex count");
        } else {
            long u, v;
            if (!(ls >> u >> v) || u < 0 || v < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected an edge \"u v\"");
            std::string rest;
            if (ls >> rest)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": trailing tokens after edge");
            if (u >= n || v >= n)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": vertex index out of range");
            if (u == v)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop");
            edges.emplace_back(static_cast<unsigned>(u), static_cast<unsigned>(v));
        }
    }
    if (n < 0) throw std::invalid_argument("empty graph description");
    Graph g(static_cast<unsigned>(n));
    for (auto [u, v] : edges) {
        if (g.adjacent(u, v)) {
            if (warnings)
                warnings->push_back("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v) + " ignored");
            continue;
        }
        g.add_edge(u, v);
    }
    return g;
}

Graph load_graph_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), warnings);
}

std::string format_graph(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << g.size() << "\n";
    for (unsigned u = 0; u < g.size(); ++u)
        for (unsigned v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) out << u << " " << v << "\n";
    return out.str();
}

namespace {

// Enumerates independent sets in increasing vertex order; `candidates` holds
// the vertices above the last chosen one that are non-adjacent to all chosen.
void count_extensions(const Graph& g, std::uint64_t candidates, unsigned size,
                      std::vector<std::uint64_t>& counts) {
    while (candidates) {
        unsigned v = static_cast<unsigned>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        ++counts[size + 1];
        std::uint64_t next = candidates & ~g.neighbors(v);
        if (next) count_extensions(g, next, size + 1, counts);
    }
}

}  // namespace

IndependenceProfile independence_profile(const Graph& g) {
    unsigned n = g.size();
    std::vector<std::uint64_t> counts(n + 2, 0);
    std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    count_extensions(g, all, 0, counts);
    IndependenceProfile p;
    unsigned d = n;
    while (d > 0 && counts[d] == 0) --d;
    p.d = d;
    p.coeffs.assign(counts.begin() + 1, counts.begin() + 1 + d);
    return p;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    unsigned ng = g.size(), nh = h.size();
    if (ng * nh > kMaxVertices)
        throw std::invalid_argument("product on " + std::to_string(ng * nh) +
                                    " vertices exceeds the 64-vertex limit");
    Graph prod(ng * nh);
    for (unsigned a = 0; a < ng; ++a)
        for (unsigned x = 0; x < nh; ++x)
            for (unsigned b = a; b < ng; ++b)
                for (unsigned y = 0; y < nh; ++y) {
                    unsigned p = a * nh + x, q = b * nh + y;
                    if (p >= q) continue;
                    if (g.adjacent(a, b) || (a == b && h.adjacent(x, y))) prod.add_edge(p, q);
                }
    return prod;
}

Family parse_family(std::string_view name) {
    if (name == "G1" || name == "g1") return Family::G1;
    if (name == "G2" || name == "g2") return Family::G2;
    if (name == "G3" || name == "g3") return Family::G3;
    throw std::invalid_argument("unknown family \"" + std::string(name) + "\" (expected G1, G2 or G3)");
}

Graph make_family(Family f, unsigned n) {
    switch (f) {
        case Family::G1: {
            if (n <= 3 || n > kMaxVertices)
                throw std::invalid_argument("G1(n) requires 3 < n <= 64");
            Graph g = complete_graph(n);
            g.remove_edge(0, 1);
            g.remove_edge(0, 2);
            g.remove_edge(1, 2);
            return g;
        }
        case Family::G2: {
            if (n <= 1 || 3 * n * n > kMaxVertices)
                throw std::invalid_argument("G2(n) requires n > 1 and 3 n^2 <= 64");
            Graph g = complete_graph(3 * n * n);
            g.remove_edge(0, 1);
            g.remove_edge(0, 2);
            g.remove_edge(1, 2);
            for (unsigned j = 4; j <= 3 * n; ++j) g.remove_edge(3, j);
            return g;
        }
        case Family::G3: {
            if (n <= 1 || n * n + 1 > kMaxVertices)
                throw std::invalid_argument("G3(n) requires n > 1 and n^2 + 1 <= 64");
            Graph g = complete_graph(n * n + 1);
            g.remove_edge(0, 1);
            g.remove_edge(0, 2);
            g.remove_edge(1, 2);
            for (unsigned j = 4; j <= 2 * n; ++j) g.remove_edge(3, j);
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

using Wide = __int128;

std::vector<Wide> poly_mul(const std::vector<Wide>& a, const std::vector<Wide>& b) {
    std::vector<Wide> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Wide prod;
            if (__builtin_mul_overflow(a[i], b[j], &prod) ||
                __builtin_add_overflow(out[i + j], prod, &out[i + j]))
                throw std::overflow_error("composition coefficients overflow");
        }
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> composed_profile(const IndependenceProfile& p) {
    // reduced polynomial Q(z) = I(z) - 1; result = sum_k a_k Q(z)^k, the
    // constant terms cancel since Q(0) = 0
    std::vector<Wide> q(p.d + 1, 0);
    for (unsigned k = 1; k <= p.d; ++k) q[k] = static_cast<Wide>(p.coeffs[k - 1]);
    std::vector<Wide> power{1};
    std::vector<Wide> acc(1, 0);
    for (unsigned k = 1; k <= p.d; ++k) {
        power = poly_mul(power, q);
        if (acc.size() < power.size()) acc.resize(power.size(), 0);
        for (std::size_t i = 0; i < power.size(); ++i) {
            Wide term;
            if (__builtin_mul_overflow(static_cast<Wide>(p.coeffs[k - 1]), power[i], &term) ||
                __builtin_add_overflow(acc[i], term, &acc[i]))
                throw std::overflow_error("composition coefficients overflow");
        }
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    std::vector<std::uint64_t> out;
    out.reserve(acc.size() - 1);
    for (std::size_t i = 1; i < acc.size(); ++i) {
        if (acc[i] < 0 || acc[i] > static_cast<Wide>(UINT64_MAX))
            throw std::overflow_error("composition coefficient does not fit in 64 bits");
        out.push_back(static_cast<std::uint64_t>(acc[i]));
    }
    return out;
}

}  // namespace indy3
