#pragma once

#include "gl11/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gl11 {

/// Formal parameters of the symbolic layer. `Delta` is a lowest conformal
/// weight, `X` stands for e/k.
enum class Param : std::size_t { Delta = 0, X = 1 };
inline constexpr std::size_t kParamCount = 2;
/// Polynomials also carry the function variable z as a third slot.
inline constexpr std::size_t kZVar = 2;
inline constexpr std::size_t kVarCount = 3;

using Monomial = std::array<std::uint32_t, kVarCount>;

/// Sparse multivariate polynomial over Q in Delta, X and z. Terms are kept
/// in lexicographic monomial order (Delta > X > z), no zero coefficients
/// are stored.
class MPoly {
  public:
    using Terms = std::map<Monomial, Rational, std::greater<>>;

    MPoly() = default;
    MPoly(const Rational &c);
    MPoly(long c) : MPoly(Rational(c)) {}
    static MPoly variable(Param p);
    static MPoly z();
    static MPoly term(const Monomial &m, const Rational &c);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()
    std::uint32_t degree(std::size_t var) const;
    const Monomial &leading_monomial() const { return terms_.begin()->first; }
    const Rational &leading_coefficient() const {
        return terms_.begin()->second;
    }

    /// Coefficients with respect to `var`: result[i] multiplies var^i.
    std::vector<MPoly> coefficients_in(std::size_t var) const;
    static MPoly from_coefficients(std::size_t var,
                                   const std::vector<MPoly> &coeffs);

    MPoly substitute(Param p, const Rational &value) const;
    MPoly derivative(std::size_t var) const;
    double evaluate(const std::array<double, kVarCount> &at) const;

    MPoly operator-() const;
    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend bool operator==(const MPoly &a, const MPoly &b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    void add_term(const Monomial &m, const Rational &c);
    Terms terms_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
MPoly exact_divide(const MPoly &a, const MPoly &b);
/// Greatest common divisor, normalized to leading coefficient 1 (0 if both 0).
MPoly gcd(const MPoly &a, const MPoly &b);
/// gcd of the coefficients of p viewed as a polynomial in `var`.
MPoly content(const MPoly &p, std::size_t var);

/// Element of Q(Delta, X); polynomials here never involve z. Canonical form: numerator and denominator coprime,
/// denominator with leading coefficient 1. Equality is structural.
class ParamField {
  public:
    ParamField() = default;
    ParamField(const Rational &c) : num_(c), den_(1) {}
    ParamField(long c) : ParamField(Rational(c)) {}
    ParamField(const MPoly &p) : num_(p), den_(1) {}
    ParamField(const MPoly &num, const MPoly &den);
    static ParamField param(Param p) { return ParamField(MPoly::variable(p)); }

    const MPoly &numerator() const { return num_; }
    const MPoly &denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    ParamField substitute(Param p, const Rational &value) const;
    double evaluate(const std::array<double, kParamCount> &at) const;

    ParamField operator-() const;
    friend ParamField operator+(const ParamField &a, const ParamField &b);
    friend ParamField operator-(const ParamField &a, const ParamField &b);
    friend ParamField operator*(const ParamField &a, const ParamField &b);
    friend ParamField operator/(const ParamField &a, const ParamField &b);
    ParamField &operator+=(const ParamField &o) { return *this = *this + o; }
    ParamField &operator-=(const ParamField &o) { return *this = *this - o; }
    ParamField &operator*=(const ParamField &o) { return *this = *this * o; }
    ParamField &operator/=(const ParamField &o) { return *this = *this / o; }
    friend bool operator==(const ParamField &a, const ParamField &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

  private:
    void normalize();
    MPoly num_;
    MPoly den_{1};
};

} // namespace gl11
