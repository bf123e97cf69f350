#pragma once

#include <cstdint>

namespace indy3 {

// Sign decisions for the coefficient discriminants are made in 128-bit
// integer arithmetic so that no taxonomy branch can flip from rounding.
using Wide = __int128;

inline int sign_of(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// a2^2 - 3 a1 a3: discriminant of P', decides real vs non-real critical points.
inline int crit_disc_sign(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return sign_of(Wide(a2) * a2 - 3 * Wide(a1) * a3);
}

// a2^2 - 4 a3 (a1 - 1): discriminant of (P(z) - z)/z, decides the non-zero fixed points.
inline int fixed_disc_sign(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return sign_of(Wide(a2) * a2 - 4 * Wide(a3) * (a1 - 1));
}

// a2^2 - 4 a1 a3: discriminant of P(z)/z, decides the non-zero zeros.
inline int zero_disc_sign(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return sign_of(Wide(a2) * a2 - 4 * Wide(a1) * a3);
}

// (a1 - 2) a2^2 - a3 (2 a1 - 3)^2: zero exactly when the larger non-zero fixed
// point is super-attracting (it then coincides with the smaller critical point).
inline int superattracting_threshold_sign(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    Wide t = Wide(2) * a1 - 3;
    return sign_of((Wide(a1) - 2) * a2 * a2 - Wide(a3) * t * t);
}

// (a1 - 3) a2^2 - 4 a3 (a1 - 2)^2: zero exactly when the larger non-zero fixed
// point is parabolic with multiplier -1.
inline int parabolic_threshold_sign(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    Wide t = Wide(a1) - 2;
    return sign_of((Wide(a1) - 3) * a2 * a2 - 4 * Wide(a3) * t * t);
}

}  // namespace indy3
