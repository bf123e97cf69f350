#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "indy3/graph.hpp"

namespace indy3 {

using Complex = std::complex<double>;

/// Reduced independence polynomial P(z) = a1 z + a2 z^2 + a3 z^3.
/// Non-formal cubics satisfy a1 >= 3, a2 >= 3, a3 >= 1 (the ranges attainable
/// from a graph with independence number three); the formal flag relaxes the
/// lower bounds on a1 and a2 to 1.
struct Cubic {
    std::int64_t a1, a2, a3;

    Cubic(std::int64_t a1_, std::int64_t a2_, std::int64_t a3_, bool formal = false);

    bool operator==(const Cubic&) const = default;
};

/// Requires p.d == 3.
Cubic cubic_from_profile(const IndependenceProfile& p);

Complex evaluate(const Cubic& P, Complex z);
Complex derivative(const Cubic& P, Complex z);

struct Disk {
    Complex center;
    double radius;

    bool contains(Complex z) const { return std::abs(z - center) <= radius; }
};

/// Closed-form special points of P. Branch convention: when a pair is real,
/// index 1 is the smaller value; when non-real, index 1 carries the negative
/// imaginary part and index 2 its conjugate.
struct StructureReport {
    Complex c1, c2;                        // critical points (zeros of P')
    Complex value_c1, value_c2;            // P(c1), P(c2)
    Complex delta1, delta2;                // non-zero fixed points; 0 is always fixed
    Complex mult_zero, mult_delta1, mult_delta2;  // P' at 0, delta1, delta2
    std::optional<double> delta_quantity;  // Delta with P'(delta2) = 1 - Delta (real delta2 only)
    Complex beta;                          // sqrt(a2^2 - 4 a3 (a1-1)), principal branch
    Complex zero1, zero2;                  // non-zero zeros of P
    Disk critical_disk;                    // center -a2/(3 a3), radius 2/sqrt(a3)
    int sign_crit, sign_fixed, sign_zero;  // exact discriminant signs
};

StructureReport structure_report(const Cubic& P);

/// P'(z). Sets *non_fixed_warning when |P(z) - z| > 1e-9, i.e. z is not a
/// fixed point to working accuracy.
Complex multiplier_at(const Cubic& P, Complex z, bool* non_fixed_warning = nullptr);

/// Q(w) = w^3 + p w + q with Q = phi^{-1} o P o phi, phi(z) = scale * z + shift,
/// scale = a3^{-1/2} (positive), shift = -a2 / (3 a3).
struct MonicCenteredForm {
    double p, q;
    double scale, shift;
};

MonicCenteredForm monic_centered_form(const Cubic& P);

/// R such that |z| >= R implies |P(z)| >= 2 |z|; any orbit reaching |z| > R
/// diverges to infinity.
double escape_radius(const Cubic& P);

enum class OrbitStatus { Escaped, BoundedSoFar };

struct OrbitOutcome {
    OrbitStatus status = OrbitStatus::BoundedSoFar;
    unsigned escape_step = 0;                 // first k with |P^k(z0)| > R, when Escaped
    std::optional<unsigned> exit_disk_step;   // first k with P^k(z0) outside the critical disk
    std::vector<Complex> trace;               // iterates 0..last, when requested
};

/// BoundedSoFar after max_iter steps is inconclusive evidence, not a proof.
OrbitOutcome iterate_orbit(const Cubic& P, Complex z0, unsigned max_iter = 1000,
                           bool record_trace = false);

/// The three solutions of P(z) = w, with multiplicity. Depressed-cubic closed
/// form followed by a Newton polish; residuals[i] = |P(roots[i]) - w|. ok is
/// false when any residual exceeds 1e-9 (roots are still returned).
struct PreimageResult {
    std::array<Complex, 3> roots;
    std::array<double, 3> residuals;
    bool ok;
};

PreimageResult preimages(const Cubic& P, Complex w);

enum class CriticalOrbitEvidence { BothEscape, BothBounded, Mixed, Inconclusive };

const char* to_string(CriticalOrbitEvidence e);

/// Runs forward orbits of the critical points. For a non-real pair only one
/// orbit is run and the result mirrored (coefficients are real). BothBounded
/// means both orbits reached max_iter without escaping.
CriticalOrbitEvidence critical_orbit_evidence(const Cubic& P, unsigned max_iter = 1000);

/// Exact integer form of the test |P(c) + a2/(3 a3)| > 2/sqrt(a3) for the
/// non-real critical point c, i.e. whether the critical value leaves the
/// critical disk. Meaningful when a2^2 < 3 a1 a3.
bool critical_value_outside_disk_exact(const Cubic& P);

}  // namespace indy3
