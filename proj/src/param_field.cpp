#include "gl11/param_field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gl11 {

namespace {

constexpr const char *kVarNames[kVarCount] = {"D", "x", "z"};

Monomial unit_monomial(std::size_t var, std::uint32_t power) {
    Monomial m{};
    m[var] = power;
    return m;
}

MPoly monic(const MPoly &p) {
    if (p.is_zero())
        return p;
    return p * MPoly(p.leading_coefficient().inverse());
}

std::uint32_t total_degree_in(const MPoly &a, const MPoly &b,
                              std::size_t var) {
    return std::max(a.degree(var), b.degree(var));
}

MPoly gcd_recursive(const MPoly &a, const MPoly &b);

MPoly content_in(const MPoly &p, std::size_t var) {
    MPoly c;
    for (const auto &coef : p.coefficients_in(var)) {
        if (coef.is_zero())
            continue;
        c = c.is_zero() ? monic(coef) : gcd_recursive(c, coef);
        if (c.is_constant())
            return MPoly(1);
    }
    return c;
}

MPoly leading_coefficient_in(const MPoly &p, std::size_t var) {
    return p.coefficients_in(var).back();
}

// Pseudo-remainder of a by b viewed as univariate polynomials in `var`.
MPoly pseudo_remainder(MPoly a, const MPoly &b, std::size_t var) {
    const std::uint32_t db = b.degree(var);
    const MPoly lb = leading_coefficient_in(b, var);
    while (!a.is_zero() && a.degree(var) >= db) {
        const std::uint32_t da = a.degree(var);
        MPoly shift = leading_coefficient_in(a, var) *
                      MPoly::term(unit_monomial(var, da - db), Rational(1));
        a = lb * a - shift * b;
    }
    return a;
}

// Rescales to integer coefficients with no common factor.
MPoly integer_primitive(const MPoly &p) {
    mpz_class den = 1, num = 0;
    for (const auto &[m, c] : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
    }
    if (num == 0)
        return p;
    return p * MPoly(Rational(mpq_class(den, num)));
}

MPoly primitive_part(const MPoly &p, std::size_t var) {
    return integer_primitive(exact_divide(p, content_in(p, var)));
}

// gcd with a single term c * m: the largest monomial dividing both.
MPoly monomial_gcd(const Monomial &m, const MPoly &b) {
    Monomial g = m;
    for (const auto &[mb, c] : b.terms())
        for (std::size_t v = 0; v < kVarCount; ++v)
            g[v] = std::min(g[v], mb[v]);
    return MPoly::term(g, Rational(1));
}

MPoly gcd_recursive(const MPoly &a, const MPoly &b) {
    if (a.is_zero())
        return monic(b);
    if (b.is_zero())
        return monic(a);
    if (a.is_constant() || b.is_constant())
        return MPoly(1);
    if (a.terms().size() == 1)
        return monomial_gcd(a.leading_monomial(), b);
    if (b.terms().size() == 1)
        return monomial_gcd(b.leading_monomial(), a);
    if (a == b)
        return monic(a);
    // Main variable: the one of lowest positive degree keeps the
    // remainder sequence short.
    std::size_t var = kVarCount;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        const std::uint32_t d = total_degree_in(a, b, v);
        if (d > 0 && (var == kVarCount || d < total_degree_in(a, b, var)))
            var = v;
    }
    if (var == kVarCount)
        return MPoly(1);

    const MPoly ca = content_in(a, var);
    const MPoly cb = content_in(b, var);
    MPoly pa = integer_primitive(exact_divide(a, ca));
    MPoly pb = integer_primitive(exact_divide(b, cb));
    const MPoly c = gcd_recursive(ca, cb);
    if (pa.degree(var) < pb.degree(var))
        std::swap(pa, pb);
    if (pb.degree(var) == 0)
        return c;
    while (true) {
        MPoly r = pseudo_remainder(pa, pb, var);
        if (r.is_zero())
            return monic(c * pb);
        if (r.degree(var) == 0)
            return c;
        pa = std::move(pb);
        pb = primitive_part(r, var);
    }
}

} // namespace

MPoly::MPoly(const Rational &c) {
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(Param p) {
    return term(unit_monomial(static_cast<std::size_t>(p), 1), Rational(1));
}

MPoly MPoly::z() { return term(unit_monomial(kZVar, 1), Rational(1)); }

MPoly MPoly::derivative(std::size_t var) const {
    MPoly r;
    for (const auto &[m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(m[var])));
    }
    return r;
}

MPoly MPoly::term(const Monomial &m, const Rational &c) {
    MPoly r;
    r.add_term(m, c);
    return r;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational MPoly::constant_value() const {
    if (!is_constant())
        throw std::domain_error("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::uint32_t MPoly::degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m[var]);
    return d;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
    std::vector<MPoly> out(degree(var) + 1);
    for (const auto &[m, c] : terms_) {
        Monomial rest = m;
        rest[var] = 0;
        out[m[var]].add_term(rest, c);
    }
    return out;
}

MPoly MPoly::from_coefficients(std::size_t var,
                               const std::vector<MPoly> &coeffs) {
    MPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto &[m, c] : coeffs[i].terms_) {
            Monomial shifted = m;
            shifted[var] += static_cast<std::uint32_t>(i);
            r.add_term(shifted, c);
        }
    }
    return r;
}

MPoly MPoly::substitute(Param p, const Rational &value) const {
    const auto var = static_cast<std::size_t>(p);
    MPoly r;
    for (const auto &[m, c] : terms_) {
        Rational factor(1);
        for (std::uint32_t i = 0; i < m[var]; ++i)
            factor *= value;
        Monomial rest = m;
        rest[var] = 0;
        r.add_term(rest, c * factor);
    }
    return r;
}

double MPoly::evaluate(const std::array<double, kVarCount> &at) const {
    double s = 0.0;
    for (const auto &[m, c] : terms_) {
        double t = c.to_double();
        for (std::size_t v = 0; v < kVarCount; ++v)
            t *= std::pow(at[v], static_cast<double>(m[v]));
        s += t;
    }
    return s;
}

void MPoly::add_term(const Monomial &m, const Rational &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto &[m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

MPoly &MPoly::operator+=(const MPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MPoly &MPoly::operator-=(const MPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly &a, const MPoly &b) {
    MPoly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t v = 0; v < kVarCount; ++v)
                m[v] = ma[v] + mb[v];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational coef = c;
        if (!first)
            os << (coef.sign() < 0 ? " - " : " + ");
        else if (coef.sign() < 0)
            os << "-";
        coef = coef.abs();
        bool has_var = m != Monomial{};
        if (!has_var || coef != Rational(1)) {
            os << coef;
            if (has_var)
                os << "*";
        }
        bool first_var = true;
        for (std::size_t v = 0; v < kVarCount; ++v) {
            if (m[v] == 0)
                continue;
            if (!first_var)
                os << "*";
            os << kVarNames[v];
            if (m[v] > 1)
                os << "^" << m[v];
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

MPoly exact_divide(const MPoly &a, const MPoly &b) {
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    MPoly q, r = a;
    const Monomial &lb = b.leading_monomial();
    const Rational &cb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial &lr = r.leading_monomial();
        Monomial t;
        for (std::size_t v = 0; v < kVarCount; ++v) {
            if (lr[v] < lb[v])
                throw std::domain_error("inexact polynomial division: (" +
                                        a.str() + ") / (" + b.str() + ")");
            t[v] = lr[v] - lb[v];
        }
        MPoly step = MPoly::term(t, r.leading_coefficient() / cb);
        q += step;
        r -= step * b;
    }
    return q;
}

MPoly gcd(const MPoly &a, const MPoly &b) { return gcd_recursive(a, b); }

MPoly content(const MPoly &p, std::size_t var) {
    return p.is_zero() ? p : content_in(p, var);
}

ParamField::ParamField(const MPoly &num, const MPoly &den)
    : num_(num), den_(den) {
    normalize();
}

void ParamField::normalize() {
    if (den_.is_zero())
        throw std::domain_error("parameter-field division by zero");
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    Rational lc = den_.leading_coefficient();
    if (lc != Rational(1)) {
        MPoly scale(lc.inverse());
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
}

bool ParamField::is_one() const {
    return den_ == MPoly(1) && num_ == MPoly(1);
}

ParamField ParamField::substitute(Param p, const Rational &value) const {
    return ParamField(num_.substitute(p, value), den_.substitute(p, value));
}

double ParamField::evaluate(const std::array<double, kParamCount> &at) const {
    const std::array<double, kVarCount> full{at[0], at[1], 0.0};
    return num_.evaluate(full) / den_.evaluate(full);
}

ParamField ParamField::operator-() const {
    ParamField r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ParamField operator+(const ParamField &a, const ParamField &b) {
    if (a.den_ == b.den_)
        return ParamField(a.num_ + b.num_, a.den_);
    return ParamField(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamField operator-(const ParamField &a, const ParamField &b) {
    return a + (-b);
}

ParamField operator*(const ParamField &a, const ParamField &b) {
    return ParamField(a.num_ * b.num_, a.den_ * b.den_);
}

ParamField operator/(const ParamField &a, const ParamField &b) {
    if (b.is_zero())
        throw std::domain_error("parameter-field division by zero");
    return ParamField(a.num_ * b.den_, a.den_ * b.num_);
}

std::string ParamField::str() const {
    if (den_ == MPoly(1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace gl11
