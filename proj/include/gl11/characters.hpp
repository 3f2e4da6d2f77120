#pragma once

#include "gl11/jacobi_series.hpp"
#include "gl11/rational.hpp"

#include <cstdint>
#include <vector>

namespace gl11 {

/// Coefficients of
///   prod_{i>=0} (1 + z q^{i+1}) (1 + z^{-1} q^i) / (1 - q^{i+1})^2
/// for q^0 .. q^depth. The q^j slice has z-degrees in [-j-1, j].
class ProductSlices {
  public:
    explicit ProductSlices(int depth);

    int depth() const { return depth_; }
    int width() const { return 2 * depth_ + 2; }
    static int min_z(int j) { return -j - 1; }
    static int max_z(int j) { return j; }
    std::int64_t at(int j, int r) const {
        return data_[static_cast<std::size_t>(j * width() + r + depth_ + 1)];
    }
    std::int64_t &at(int j, int r) {
        return data_[static_cast<std::size_t>(j * width() + r + depth_ + 1)];
    }
    friend bool operator==(const ProductSlices &, const ProductSlices &) = default;

  private:
    int depth_;
    std::vector<std::int64_t> data_;
};

/// Slice-parallel kernel: q^j slices are assembled independently from
/// bipartition counts and distinct-part partition tables (OpenMP).
ProductSlices verma_product_slices(int depth);
/// Reference implementation: multiplies the truncated factors one at a time.
ProductSlices verma_product_slices_serial(int depth);

/// Character of the generalized Verma module V_{n,e}:
/// q^Delta y^ehat z^n times the product above, exact up to q^{Delta + cutoff}.
JacobiSeries char_verma(const Rational &n, const Rational &ehat,
                        const Rational &q_cutoff);

/// Character of A_{n,0} as the alternating sum of V_{n-1/2-m,0} (m >= 0),
/// restricted to z exponents in [z_lo, z_hi]; exact up to q^cutoff.
JacobiSeries char_atypical0(const Rational &n, const Rational &q_cutoff,
                            const Rational &z_lo, const Rational &z_hi);

struct InducedCharacter {
    JacobiSeries lhs;    // sum over |m| <= m_range of ch V_{n+m, ehat-2m}
    JacobiSeries rhs;    // ch V_{n,ehat} * sum q^{-m(2n+ehat)} y^{-2m} z^m
    Rational q_limit;    // both are exact and truncated at this q exponent
};

/// Both sides of the induced-module character identity at level 1, exact on
/// q <= Delta_{n,ehat} + q_cutoff.
InducedCharacter char_induced_typical(const Rational &n, const Rational &ehat,
                                      int m_range, const Rational &q_cutoff);

} // namespace gl11
