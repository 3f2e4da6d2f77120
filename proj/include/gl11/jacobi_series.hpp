#pragma once

#include "gl11/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

namespace gl11 {

struct JacobiExponent {
    Rational q, z, y;
    friend auto operator<=>(const JacobiExponent &,
                            const JacobiExponent &) = default;
};

/// Truncated series in (q, z, y) with rational exponents and exact integer
/// coefficients. Coefficients are known exactly for every q exponent up to
/// `q_limit()`; terms beyond it are never stored. A missing limit means the
/// series is exact (a finite Laurent polynomial).
class JacobiSeries {
  public:
    using Terms = std::map<JacobiExponent, std::int64_t>;

    JacobiSeries() = default;
    /// Terms with q above the limit are dropped, zeros removed.
    JacobiSeries(Terms terms, std::optional<Rational> q_limit);
    static JacobiSeries monomial(const JacobiExponent &e, std::int64_t c = 1);

    const Terms &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    const std::optional<Rational> &q_limit() const { return q_limit_; }
    std::optional<Rational> min_q() const;
    /// Width of the exact window above the minimal stored q exponent.
    std::optional<Rational> q_cutoff() const;
    std::int64_t coefficient(const JacobiExponent &e) const;

    JacobiSeries truncated(const Rational &q_limit) const;
    /// Keeps only terms with lo <= z <= hi.
    JacobiSeries z_restricted(const Rational &lo, const Rational &hi) const;
    JacobiSeries scaled(std::int64_t factor) const;

    friend JacobiSeries operator+(const JacobiSeries &a, const JacobiSeries &b);
    friend JacobiSeries operator-(const JacobiSeries &a, const JacobiSeries &b);
    friend bool operator==(const JacobiSeries &a, const JacobiSeries &b) {
        return a.terms_ == b.terms_ && a.q_limit_ == b.q_limit_;
    }

  private:
    Terms terms_;
    std::optional<Rational> q_limit_;
};

/// Truncated product: exact up to min(limA + minB, limB + minA), i.e. the
/// smaller of the two windows measured from the product's minimal exponent.
JacobiSeries jacobi_mul(const JacobiSeries &a, const JacobiSeries &b);

/// True iff all coefficients with q within `window` of the common minimal
/// q exponent agree. Throws std::invalid_argument if either series is not
/// exact on that whole range.
bool jacobi_equal_to_cutoff(const JacobiSeries &a, const JacobiSeries &b,
                            const Rational &window);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace gl11
