#pragma once

#include "gl11/param_field.hpp"

#include <string>
#include <vector>

namespace gl11 {

/// Dense univariate polynomial in z over ParamField; coeffs()[i] multiplies
/// z^i. No trailing zero coefficients.
class ZPoly {
  public:
    ZPoly() = default;
    ZPoly(const ParamField &c);
    ZPoly(long c) : ZPoly(ParamField(c)) {}
    explicit ZPoly(std::vector<ParamField> coeffs);
    static ZPoly z() { return ZPoly({ParamField(0), ParamField(1)}); }

    const std::vector<ParamField> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ParamField &leading() const { return coeffs_.back(); }

    ZPoly derivative() const;
    ZPoly monic() const;
    ZPoly substitute(Param p, const Rational &value) const;

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly &a, const ZPoly &b);
    friend ZPoly operator-(const ZPoly &a, const ZPoly &b);
    friend ZPoly operator*(const ZPoly &a, const ZPoly &b);
    friend bool operator==(const ZPoly &a, const ZPoly &b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    void trim();
    std::vector<ParamField> coeffs_;
};

/// Quotient and remainder of polynomial long division (b nonzero).
std::pair<ZPoly, ZPoly> divmod(const ZPoly &a, const ZPoly &b);
/// Monic gcd (Euclid over the coefficient field).
ZPoly gcd(const ZPoly &a, const ZPoly &b);

/// Rational function in z over ParamField, stored as a quotient of
/// polynomials in (Delta, X, z). Canonical form: coprime numerator and
/// denominator, denominator with lex-leading coefficient 1. Equality is
/// structural.
class RationalFunction {
  public:
    RationalFunction() = default;
    RationalFunction(const ParamField &c);
    RationalFunction(long c) : RationalFunction(ParamField(c)) {}
    RationalFunction(const ZPoly &p);
    RationalFunction(const ZPoly &num, const ZPoly &den);
    static RationalFunction z();
    static RationalFunction param(Param p) {
        return RationalFunction(ParamField::param(p));
    }

    /// Numerator and denominator as polynomials in z.
    ZPoly numerator() const;
    ZPoly denominator() const;
    bool is_zero() const { return num_.is_zero(); }

    /// d/dz.
    RationalFunction derivative() const;
    RationalFunction substitute(Param p, const Rational &value) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction &a,
                                      const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a,
                                      const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a,
                                      const RationalFunction &b);
    friend RationalFunction operator/(const RationalFunction &a,
                                      const RationalFunction &b);
    friend bool operator==(const RationalFunction &a,
                           const RationalFunction &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

  private:
    RationalFunction(MPoly num, MPoly den, bool reduced);
    void normalize(bool reduced);
    MPoly num_;
    MPoly den_{1};
};

enum class RatFunOp { Add, Sub, Mul, Div, Differentiate };

/// Dispatches the field operations by tag; `b` is ignored for Differentiate.
RationalFunction ratfun_arith(const RationalFunction &a,
                              const RationalFunction &b, RatFunOp op);

} // namespace gl11
