#pragma once

#include "gl11/labels.hpp"
#include "gl11/rational.hpp"

#include <cstdint>
#include <random>

namespace gl11::testing {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::int64_t max_num = 6, std::int64_t max_den = 4) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
}

/// Non-integral p/q with q <= max_den.
inline Rational random_typical_ehat(std::int64_t max_num = 6, std::int64_t max_den = 4) {
    for (;;) {
        Rational r(uniform(-max_num, max_num), uniform(2, max_den));
        if (!r.is_integer())
            return r;
    }
}

inline std::int64_t random_ell(std::int64_t bound = 3) { return uniform(-bound, bound); }

inline ModuleLabel random_typical() {
    return ModuleLabel::typical(random_rational(), random_typical_ehat());
}
inline ModuleLabel random_atypical() {
    return ModuleLabel::atypical(random_rational(), random_ell());
}
inline ModuleLabel random_projective() {
    return ModuleLabel::projective(random_rational(), random_ell());
}
inline ModuleLabel random_simple() {
    return uniform(0, 1) ? random_typical() : random_atypical();
}
inline ModuleLabel random_simple_or_projective() {
    switch (uniform(0, 2)) {
    case 0:
        return random_typical();
    case 1:
        return random_atypical();
    default:
        return random_projective();
    }
}

} // namespace gl11::testing
