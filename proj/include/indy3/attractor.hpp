#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indy3/cubic.hpp"

namespace indy3 {

/// Finite multiset of complex points. Entries are kept sorted by (re, im) and
/// exactly equal coordinates are merged by adding multiplicities, so results
/// do not depend on expansion order.
struct PointSet {
    struct Entry {
        Complex z;
        std::uint64_t mult;
    };

    std::vector<Entry> entries;

    // generation parameters
    std::string mode;  // "full-tree", "random-sample", "julia-inverse", "file"
    unsigned depth = 0;
    std::uint64_t seed = 0;
    std::uint64_t sample_count = 0;

    // Residual audit for root-producing modes; points above 1e-6 are counted,
    // never dropped. Tree modes (depth <= 13) audit |P^depth(z) + 1| by fresh
    // forward evaluation. Deeper random walks audit the per-solve backward
    // residual instead: past ~13 doublings the forward map amplifies a single
    // ulp of a root beyond any fixed bound.
    double max_residual = 0.0;
    std::uint64_t flagged = 0;

    std::uint64_t total() const;  // sum of multiplicities

    void sort_and_merge();
};

/// S_m = { z : P^m(z) = -1 } with multiplicity, by full backward expansion
/// from -1. Requires 1 <= m <= 13 (3^13 ~ 1.6M points).
PointSet roots_of_level(const Cubic& P, unsigned m);

/// Full-tree approximation of the independence attractor: S_depth, plus the
/// union of all intermediate root levels when the attractor is the disjoint
/// union of the Julia set and the root levels (a2 = 2 a1 - 3, a3 = a1 - 2,
/// where the root levels persist in the limit).
PointSet approximate_attractor(const Cubic& P, unsigned depth);

/// Seeded sampling variant: `count` independent backward random walks of
/// length `depth` from -1, one endpoint each (uniform branch choice,
/// xorshift64*). Root levels are merged in as above, capped at depth 9.
struct SampleMode {
    std::uint64_t count;
    std::uint64_t seed;
};

PointSet approximate_attractor(const Cubic& P, unsigned depth, SampleMode mode);

/// Random backward orbit of the repelling fixed point 0; the first 50 points
/// are burn-in and dropped. Requires iterations >= 100.
PointSet julia_inverse_sample(const Cubic& P, unsigned iterations, std::uint64_t seed);

/// max(sup_a dist(a, B), sup_b dist(b, A)); brute force over distinct points.
/// Both sets must be non-empty.
double hausdorff_distance(const PointSet& a, const PointSet& b);

/// Largest pairwise distance (convex hull + pair scan). Non-empty input.
double diameter(const PointSet& a);

struct Rect {
    double cx, cy, width, height;
};

struct EscapeGrid {
    Rect window;
    unsigned width = 0, height = 0;
    unsigned max_iter = 0;
    std::vector<std::uint32_t> counts;  // row-major, row 0 at the top

    std::uint32_t at(unsigned x, unsigned y) const { return counts[y * width + x]; }
};

/// Per-pixel first iterate index beyond the escape radius, or max_iter if the
/// orbit stays bounded for max_iter steps.
EscapeGrid escape_time_grid(const Cubic& P, Rect window, unsigned width, unsigned height,
                            unsigned max_iter, unsigned threads = 0);

/// Critical disk scaled by 1.5, as a square window.
Rect default_window(const Cubic& P);

/// CSV with header "re,im,mult"; full double precision.
void write_point_csv(const PointSet& s, std::ostream& out);
PointSet read_point_csv(std::istream& in);
PointSet load_point_csv(const std::string& path);

/// Binary 8-bit PGM; counts scale linearly to 0..255 with max_iter black.
void write_pgm(const EscapeGrid& g, std::ostream& out);

}  // namespace indy3
