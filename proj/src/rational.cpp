#include "gl11/rational.hpp"

#include "gl11/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gl11 {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view("1")
                                        : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' ||
        den.front() == '+')
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+')
        n.erase(0, 1);
    mpz_class zn(n), zd{std::string(den)};
    if (zd == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(zn, zd);
    return Rational(q);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer())
        throw std::domain_error("rational " + str() + " is not an integer");
    const mpz_class &z = q_.get_num();
    if (!z.fits_slong_p())
        throw std::overflow_error("integer " + str() + " out of range");
    return z.get_si();
}

Rational Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

Rational Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero())
        throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
}

} // namespace gl11
