#include "gl11/rational_function.hpp"

#include <stdexcept>

namespace gl11 {

ZPoly::ZPoly(const ParamField &c) {
    if (!c.is_zero())
        coeffs_.push_back(c);
}

ZPoly::ZPoly(std::vector<ParamField> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

ZPoly ZPoly::derivative() const {
    std::vector<ParamField> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * ParamField(static_cast<long>(i)));
    return ZPoly(std::move(d));
}

ZPoly ZPoly::monic() const {
    if (is_zero())
        return *this;
    ParamField inv = ParamField(1) / leading();
    std::vector<ParamField> c;
    c.reserve(coeffs_.size());
    for (const auto &x : coeffs_)
        c.push_back(x * inv);
    return ZPoly(std::move(c));
}

ZPoly ZPoly::substitute(Param p, const Rational &value) const {
    std::vector<ParamField> c;
    c.reserve(coeffs_.size());
    for (const auto &x : coeffs_)
        c.push_back(x.substitute(p, value));
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const {
    std::vector<ParamField> c;
    c.reserve(coeffs_.size());
    for (const auto &x : coeffs_)
        c.push_back(-x);
    return ZPoly(std::move(c));
}

ZPoly operator+(const ZPoly &a, const ZPoly &b) {
    std::vector<ParamField> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly &a, const ZPoly &b) { return a + (-b); }

ZPoly operator*(const ZPoly &a, const ZPoly &b) {
    if (a.is_zero() || b.is_zero())
        return ZPoly();
    std::vector<ParamField> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ZPoly(std::move(c));
}

std::string ZPoly::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const ParamField &c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + c.str() + ")";
        if (i > 0)
            s += i == 1 ? "*z" : "*z^" + std::to_string(i);
    }
    return s;
}

std::pair<ZPoly, ZPoly> divmod(const ZPoly &a, const ZPoly &b) {
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<ParamField> q(
        a.degree() >= b.degree()
            ? static_cast<std::size_t>(a.degree() - b.degree() + 1)
            : 0);
    ZPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        ParamField factor = r.leading() / b.leading();
        q[shift] = factor;
        std::vector<ParamField> t(shift + 1);
        t[shift] = factor;
        r = r - ZPoly(std::move(t)) * b;
    }
    return {ZPoly(std::move(q)), r};
}

ZPoly gcd(const ZPoly &a, const ZPoly &b) {
    ZPoly x = a, y = b;
    while (!y.is_zero()) {
        ZPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RationalFunction::RationalFunction(const ParamField &c)
    : RationalFunction(c.numerator(), c.denominator(), true) {}

RationalFunction::RationalFunction(const ZPoly &p) {
    RationalFunction acc;
    RationalFunction power(1);
    for (const auto &c : p.coeffs()) {
        acc = acc + RationalFunction(c) * power;
        power = power * z();
    }
    *this = acc;
}

RationalFunction::RationalFunction(const ZPoly &num, const ZPoly &den) {
    *this = RationalFunction(num) / RationalFunction(den);
}

RationalFunction::RationalFunction(MPoly num, MPoly den, bool reduced)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize(reduced);
}

RationalFunction RationalFunction::z() {
    return RationalFunction(MPoly::z(), MPoly(1), true);
}

void RationalFunction::normalize(bool reduced) {
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!reduced) {
        const MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != Rational(1)) {
        const MPoly inv(lc.inverse());
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

namespace {

ZPoly as_zpoly(const MPoly &p) {
    std::vector<ParamField> c;
    for (const auto &coef : p.coefficients_in(kZVar))
        c.emplace_back(coef);
    return ZPoly(std::move(c));
}

} // namespace

ZPoly RationalFunction::numerator() const { return as_zpoly(num_); }
ZPoly RationalFunction::denominator() const { return as_zpoly(den_); }

RationalFunction RationalFunction::derivative() const {
    // With g = gcd(d, d') and e = d / g, (n/d)' = (n' e - n d'/g) / (d e).
    // Factors of d involving z cannot survive; z-free ones all divide g.
    const MPoly dn = num_.derivative(kZVar), dd = den_.derivative(kZVar);
    if (dd.is_zero())
        return RationalFunction(dn, den_, false);
    const MPoly g = gcd(den_, dd);
    const MPoly e = exact_divide(den_, g);
    MPoly num = dn * e - num_ * exact_divide(dd, g);
    MPoly den = den_ * e;
    if (num.is_zero())
        return RationalFunction();
    const MPoly gz = content(g, kZVar);
    if (!gz.is_constant()) {
        const MPoly h = gcd(content(num, kZVar), gz);
        if (!h.is_constant()) {
            num = exact_divide(num, h);
            den = exact_divide(den, h);
        }
    }
    return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction RationalFunction::substitute(Param p,
                                              const Rational &value) const {
    return RationalFunction(num_.substitute(p, value), den_.substitute(p, value),
                            false);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction &a,
                           const RationalFunction &b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_, false);
    // Denominators g d1, g d2 with d1, d2 coprime: only g can cancel.
    const MPoly g = gcd(a.den_, b.den_);
    const MPoly d1 = exact_divide(a.den_, g), d2 = exact_divide(b.den_, g);
    MPoly num = a.num_ * d2 + b.num_ * d1;
    MPoly den = a.den_ * d2;
    if (num.is_zero())
        return RationalFunction();
    const MPoly h = gcd(num, g);
    if (!h.is_constant()) {
        num = exact_divide(num, h);
        den = exact_divide(den, h);
    }
    return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction operator-(const RationalFunction &a,
                           const RationalFunction &b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction &a,
                           const RationalFunction &b) {
    if (a.is_zero() || b.is_zero())
        return RationalFunction();
    const MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RationalFunction(exact_divide(a.num_, g1) * exact_divide(b.num_, g2),
                            exact_divide(a.den_, g2) * exact_divide(b.den_, g1),
                            true);
}

RationalFunction operator/(const RationalFunction &a,
                           const RationalFunction &b) {
    if (b.is_zero())
        throw std::domain_error("division by the zero rational function");
    RationalFunction inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.normalize(true);
    return a * inv;
}

std::string RationalFunction::str() const {
    if (den_ == MPoly(1))
        return num_.str();
    return "[" + num_.str() + "] / [" + den_.str() + "]";
}

RationalFunction ratfun_arith(const RationalFunction &a,
                              const RationalFunction &b, RatFunOp op) {
    switch (op) {
    case RatFunOp::Add:
        return a + b;
    case RatFunOp::Sub:
        return a - b;
    case RatFunOp::Mul:
        return a * b;
    case RatFunOp::Div:
        return a / b;
    case RatFunOp::Differentiate:
        return a.derivative();
    }
    throw std::invalid_argument("unknown rational-function operation");
}

} // namespace gl11
