#include "indy3/cubic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "indy3/exact.hpp"

namespace indy3 {

namespace {

constexpr std::int64_t kCoeffCap = 1'000'000;  // keeps every 128-bit sign product exact

// principal square root of an integer: real branch for d >= 0, +i branch otherwise
Complex sqrt_signed(Wide d) {
    double m = std::sqrt(std::abs(static_cast<double>(d)));
    return d >= 0 ? Complex(m, 0.0) : Complex(0.0, m);
}

}  // namespace

Cubic::Cubic(std::int64_t a1_, std::int64_t a2_, std::int64_t a3_, bool formal)
    : a1(a1_), a2(a2_), a3(a3_) {
    std::int64_t min1 = formal ? 1 : 3;
    if (a1 < min1 || a2 < min1 || a3 < 1)
        throw std::invalid_argument("cubic coefficients out of range: (" + std::to_string(a1) +
                                    ", " + std::to_string(a2) + ", " + std::to_string(a3) + ")");
    if (a1 > kCoeffCap || a2 > kCoeffCap || a3 > kCoeffCap)
        throw std::invalid_argument("cubic coefficients exceed the supported range");
}

Cubic cubic_from_profile(const IndependenceProfile& p) {
    if (p.d != 3)
        throw std::invalid_argument("independence number is " + std::to_string(p.d) +
                                    ", expected 3");
    return Cubic(static_cast<std::int64_t>(p.coeffs[0]), static_cast<std::int64_t>(p.coeffs[1]),
                 static_cast<std::int64_t>(p.coeffs[2]));
}

Complex evaluate(const Cubic& P, Complex z) {
    return ((static_cast<double>(P.a3) * z + static_cast<double>(P.a2)) * z +
            static_cast<double>(P.a1)) *
           z;
}

Complex derivative(const Cubic& P, Complex z) {
    return (3.0 * static_cast<double>(P.a3) * z + 2.0 * static_cast<double>(P.a2)) * z +
           static_cast<double>(P.a1);
}

StructureReport structure_report(const Cubic& P) {
    const double a1 = static_cast<double>(P.a1);
    const double a2 = static_cast<double>(P.a2);
    const double a3 = static_cast<double>(P.a3);
    StructureReport r;
    r.sign_crit = crit_disc_sign(P.a1, P.a2, P.a3);
    r.sign_fixed = fixed_disc_sign(P.a1, P.a2, P.a3);
    r.sign_zero = zero_disc_sign(P.a1, P.a2, P.a3);

    Complex sc = sqrt_signed(Wide(P.a2) * P.a2 - 3 * Wide(P.a1) * P.a3);
    r.c1 = (Complex(-a2) - sc) / (3.0 * a3);
    r.c2 = (Complex(-a2) + sc) / (3.0 * a3);
    r.value_c1 = evaluate(P, r.c1);
    r.value_c2 = evaluate(P, r.c2);

    r.beta = sqrt_signed(Wide(P.a2) * P.a2 - 4 * Wide(P.a3) * (P.a1 - 1));
    r.delta1 = (Complex(-a2) - r.beta) / (2.0 * a3);
    r.delta2 = (Complex(-a2) + r.beta) / (2.0 * a3);
    r.mult_zero = Complex(a1);
    r.mult_delta1 = derivative(P, r.delta1);
    r.mult_delta2 = derivative(P, r.delta2);
    if (r.sign_fixed >= 0) {
        double beta = r.beta.real();
        r.delta_quantity = 2.0 * (a1 - 1.0) * beta / (a2 + beta);
    }

    Complex sz = sqrt_signed(Wide(P.a2) * P.a2 - 4 * Wide(P.a1) * P.a3);
    r.zero1 = (Complex(-a2) - sz) / (2.0 * a3);
    r.zero2 = (Complex(-a2) + sz) / (2.0 * a3);

    r.critical_disk = Disk{Complex(-a2 / (3.0 * a3)), 2.0 / std::sqrt(a3)};
    return r;
}

Complex multiplier_at(const Cubic& P, Complex z, bool* non_fixed_warning) {
    if (non_fixed_warning) *non_fixed_warning = std::abs(evaluate(P, z) - z) > 1e-9;
    return derivative(P, z);
}

MonicCenteredForm monic_centered_form(const Cubic& P) {
    const double a1 = static_cast<double>(P.a1);
    const double a2 = static_cast<double>(P.a2);
    const double a3 = static_cast<double>(P.a3);
    MonicCenteredForm f;
    f.scale = 1.0 / std::sqrt(a3);
    f.shift = -a2 / (3.0 * a3);
    f.p = a1 - a2 * a2 / (3.0 * a3);
    // q = (P(shift) - shift) * sqrt(a3)
    f.q = std::sqrt(a3) * f.shift * (a1 - 1.0 - 2.0 * a2 * a2 / (9.0 * a3));
    return f;
}

double escape_radius(const Cubic& P) {
    const double a1 = static_cast<double>(P.a1);
    const double a2 = static_cast<double>(P.a2);
    const double a3 = static_cast<double>(P.a3);
    return (a2 + std::sqrt(a2 * a2 + 4.0 * a3 * (a1 + 2.0))) / (2.0 * a3);
}

OrbitOutcome iterate_orbit(const Cubic& P, Complex z0, unsigned max_iter, bool record_trace) {
    const double radius = escape_radius(P);
    const Disk disk = structure_report(P).critical_disk;
    OrbitOutcome out;
    Complex z = z0;
    for (unsigned k = 0;; ++k) {
        if (record_trace) out.trace.push_back(z);
        if (!out.exit_disk_step && !disk.contains(z)) out.exit_disk_step = k;
        if (std::abs(z) > radius) {
            out.status = OrbitStatus::Escaped;
            out.escape_step = k;
            return out;
        }
        if (k == max_iter) break;
        z = evaluate(P, z);
    }
    out.status = OrbitStatus::BoundedSoFar;
    return out;
}

namespace {

Complex newton_polish(const Cubic& P, Complex w, Complex z) {
    Complex f = evaluate(P, z) - w;
    for (int step = 0; step < 6; ++step) {
        Complex df = derivative(P, z);
        if (df == Complex(0.0)) break;
        Complex z_next = z - f / df;
        Complex f_next = evaluate(P, z_next) - w;
        if (!(std::abs(f_next) < std::abs(f))) break;
        z = z_next;
        f = f_next;
    }
    return z;
}

// A cluster of nearly equal roots is a multiple root of P(z) - w, hence a
// critical point of P, which has a closed form far more accurate than any
// residual-driven polish near the flat spot. Snap the cluster onto it.
void refine_clusters(const Cubic& P, Complex w, std::array<Complex, 3>& r) {
    constexpr double kCandidate = 1e-6;
    bool c01 = std::abs(r[0] - r[1]) < kCandidate;
    bool c02 = std::abs(r[0] - r[2]) < kCandidate;
    bool c12 = std::abs(r[1] - r[2]) < kCandidate;
    if (!(c01 || c02 || c12)) return;

    Complex sq = sqrt_signed(Wide(P.a2) * P.a2 - 3 * Wide(P.a1) * P.a3);
    const double a3 = static_cast<double>(P.a3);
    const Complex crit[2] = {(Complex(-static_cast<double>(P.a2)) - sq) / (3.0 * a3),
                             (Complex(-static_cast<double>(P.a2)) + sq) / (3.0 * a3)};

    if (c01 + c02 + c12 >= 2) {  // triple root: both critical points coincide
        Complex c = Complex(-static_cast<double>(P.a2) / (3.0 * a3));
        if (std::abs(evaluate(P, c) - w) <= std::abs(evaluate(P, r[0]) - w) + 1e-12)
            r = {c, c, c};
        return;
    }
    int i = 0, j = 1;
    if (c02) j = 2;
    else if (c12) i = 1, j = 2;
    Complex mid = (r[i] + r[j]) * 0.5;
    Complex c = std::abs(mid - crit[0]) < std::abs(mid - crit[1]) ? crit[0] : crit[1];
    if (std::abs(c - mid) < kCandidate &&
        std::abs(evaluate(P, c) - w) <= std::abs(evaluate(P, mid) - w) + 1e-12) {
        r[i] = c;
        r[j] = c;
    }
}

}  // namespace

PreimageResult preimages(const Cubic& P, Complex w) {
    const double a3 = static_cast<double>(P.a3);
    const double B = static_cast<double>(P.a2) / a3;
    const double C = static_cast<double>(P.a1) / a3;
    const Complex D = -w / a3;

    // depress via z = t - B/3
    const double p = C - B * B / 3.0;
    const Complex q = Complex(2.0 * B * B * B / 27.0 - B * C / 3.0) + D;

    std::array<Complex, 3> t;
    Complex s = std::sqrt(q * q * 0.25 + Complex(p * p * p / 27.0));
    Complex u3 = -q * 0.5 + s;
    Complex u3_alt = -q * 0.5 - s;
    if (std::abs(u3) < std::abs(u3_alt)) u3 = u3_alt;
    if (u3 == Complex(0.0)) {
        // p = q = 0: triple root of the depressed cubic
        t = {Complex(0.0), Complex(0.0), Complex(0.0)};
    } else {
        Complex u = std::pow(u3, 1.0 / 3.0);
        Complex v = Complex(-p / 3.0) / u;
        const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
        const Complex omega2 = std::conj(omega);
        t = {u + v, u * omega + v * omega2, u * omega2 + v * omega};
    }

    PreimageResult res;
    for (int i = 0; i < 3; ++i) res.roots[i] = newton_polish(P, w, t[i] - Complex(B / 3.0));
    refine_clusters(P, w, res.roots);

    res.ok = true;
    for (int i = 0; i < 3; ++i) {
        res.residuals[i] = std::abs(evaluate(P, res.roots[i]) - w);
        if (!(res.residuals[i] <= 1e-9)) res.ok = false;
    }
    return res;
}

const char* to_string(CriticalOrbitEvidence e) {
    switch (e) {
        case CriticalOrbitEvidence::BothEscape: return "BothEscape";
        case CriticalOrbitEvidence::BothBounded: return "BothBounded";
        case CriticalOrbitEvidence::Mixed: return "Mixed";
        case CriticalOrbitEvidence::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CriticalOrbitEvidence critical_orbit_evidence(const Cubic& P, unsigned max_iter) {
    StructureReport r = structure_report(P);
    if (r.sign_crit <= 0) {
        // single critical point, or a conjugate pair sharing one fate
        Complex c = r.sign_crit < 0 ? r.c2 : r.c1;
        OrbitOutcome o = iterate_orbit(P, c, max_iter);
        return o.status == OrbitStatus::Escaped ? CriticalOrbitEvidence::BothEscape
                                                : CriticalOrbitEvidence::BothBounded;
    }
    OrbitOutcome o1 = iterate_orbit(P, r.c1, max_iter);
    OrbitOutcome o2 = iterate_orbit(P, r.c2, max_iter);
    bool e1 = o1.status == OrbitStatus::Escaped;
    bool e2 = o2.status == OrbitStatus::Escaped;
    if (e1 && e2) return CriticalOrbitEvidence::BothEscape;
    if (!e1 && !e2) return CriticalOrbitEvidence::BothBounded;
    return CriticalOrbitEvidence::Mixed;
}

bool critical_value_outside_disk_exact(const Cubic& P) {
    // |P(c) + a2/(3 a3)|^2 > 4/a3 cleared of denominators:
    // with K = a1^2 + 6 a1 - 3, L = 8 a2^2 - 3 a3 K, the test is
    // L^2 > a3^2 (9 K^2 - 192 a1^3 + 5184).
    Wide a1 = P.a1, a2 = P.a2, a3 = P.a3;
    Wide K = a1 * a1 + 6 * a1 - 3;
    Wide L = 8 * a2 * a2 - 3 * a3 * K;
    Wide M = a3 * a3 * (9 * K * K - 192 * a1 * a1 * a1 + 5184);
    return L * L > M;
}

}  // namespace indy3
