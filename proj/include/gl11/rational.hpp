#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gl11 {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
  public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    const mpq_class &raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Requires is_integer() and a value that fits in int64.
    std::int64_t to_int64() const;
    double to_double() const { return q_.get_d(); }

    Rational floor() const;
    Rational ceil() const;
    Rational abs() const { return Rational(::abs(q_)); }
    Rational inverse() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const Rational &a,
                                            const Rational &b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater
                              : std::strong_ordering::equal);
    }

  private:
    mpq_class q_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

inline Rational min(const Rational &a, const Rational &b) { return a < b ? a : b; }
inline Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

} // namespace gl11
