#pragma once

#include "gl11/jacobi_series.hpp"
#include "gl11/labels.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gl11 {

/// Simple-current extension generated by the atypical A_{a,b}; the m-th
/// summand is A_{m(a - eps(b)) + eps(mb), mb}.
class ExtensionSpec {
  public:
    enum class Kind { Sl21MinusHalf, Sl21Level1, Custom };

    /// sl(2|1) at level -1/2: summands A_{m - eps(m), -2m}.
    static ExtensionSpec sl21_minus_half();
    /// sl(2|1) at level 1: summands A_{eps(m), m}.
    static ExtensionSpec sl21_level1();
    /// Generator A_{a,b}. Admissibility failures land in warnings().
    static ExtensionSpec custom(const Rational &a, std::int64_t b);

    Kind kind() const { return kind_; }
    std::string name() const;
    const Rational &a() const { return a_; }
    std::int64_t b() const { return b_; }
    const std::vector<std::string> &warnings() const { return warnings_; }

    ModuleLabel generator_of(std::int64_t m) const;

  private:
    ExtensionSpec(Kind kind, Rational a, std::int64_t b)
        : kind_(kind), a_(std::move(a)), b_(b) {}
    Kind kind_;
    Rational a_;
    std::int64_t b_;
    std::vector<std::string> warnings_;
};

/// Delta(s x c) - Delta(s) - Delta(c). Throws std::invalid_argument unless
/// the fusion product is a single simple label.
Rational monodromy_exponent(const ModuleLabel &s, const ModuleLabel &c);

/// Monodromy trivial against every summand (checked at m = +-1).
/// Throws std::invalid_argument for non-simple s.
bool is_local(const ModuleLabel &s, const ExtensionSpec &ext);
/// Closed-form criteria for the two sl(2|1) extensions. Throws
/// std::invalid_argument for custom extensions and non-simple s.
bool is_local_closed_form(const ModuleLabel &s, const ExtensionSpec &ext);

/// s x g_m for m = -m_range .. m_range.
std::vector<ModuleLabel> induce(const ModuleLabel &s, const ExtensionSpec &ext,
                                std::int64_t m_range);

/// True iff s2 = s x g_m for some integer m (parity markers ignored).
bool induced_equivalent(const ModuleLabel &s, const ModuleLabel &s2,
                        const ExtensionSpec &ext);

/// Induction of the projective cover. Throws std::invalid_argument if s is
/// not local.
std::vector<ModuleLabel> induced_projective_cover(const ModuleLabel &s,
                                                  const ExtensionSpec &ext,
                                                  std::int64_t m_range);

enum class GrowthClass { RelaxedFlat, SpectralFlowUnbounded, LowestWeight };
std::string to_string(GrowthClass c);

/// Delta(s x g_m) is quadratic in m on each side of the kinks of eps;
/// linear_coeff is the m -> +inf branch, linear_coeff_negative the m -> -inf
/// branch (both as coefficients of m).
struct WeightGrowth {
    Rational quadratic_coeff;
    Rational linear_coeff;
    Rational linear_coeff_negative;
    GrowthClass classification;
};

WeightGrowth weight_growth(const ModuleLabel &s, const ExtensionSpec &ext);

/// Character of the level -1/2 induction of V_{n,ehat}; both sides of the
/// sum/product identity are computed and must agree (std::logic_error if not).
JacobiSeries induced_character(const Rational &n, const Rational &ehat,
                               int m_range, const Rational &q_cutoff);

} // namespace gl11
