#include "gl11/errors.hpp"
#include "gl11/jacobi_series.hpp"
#include "gl11/qmatrix.hpp"
#include "gl11/rational_function.hpp"
#include "support.hpp"

#include <doctest.h>

#include <limits>

using namespace gl11;
using gl11::testing::random_rational;
using gl11::testing::uniform;

namespace {

RationalFunction Z() { return RationalFunction::z(); }
RationalFunction D() { return RationalFunction::param(Param::Delta); }
RationalFunction X() { return RationalFunction::param(Param::X); }

ParamField random_param_field() {
    const ParamField d = ParamField::param(Param::Delta), x = ParamField::param(Param::X);
    ParamField num = ParamField(random_rational()) + ParamField(random_rational()) * d +
                     ParamField(random_rational()) * x * x;
    ParamField den = ParamField(1) + ParamField(random_rational()) * d * x;
    return num / den;
}

// Shaped like the coefficients met in the KZ reduction: polynomial in the
// parameters, poles at a rational point of z and along x = 0.
RationalFunction random_ratfun() {
    const auto poly = [] {
        return RationalFunction(random_rational()) + RationalFunction(random_rational()) * D() +
               RationalFunction(random_rational()) * X();
    };
    RationalFunction num = poly() + poly() * Z() + RationalFunction(random_rational()) * Z() * Z();
    RationalFunction den = X() * (Z() - RationalFunction(uniform(-2, 2)));
    return num / den;
}

JacobiExponent ex(Rational q, Rational z = 0, Rational y = 0) { return {q, z, y}; }

} // namespace

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(-7, 2).floor() == Rational(-4));
    CHECK(Rational(-7, 2).ceil() == Rational(-3));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("rational field axioms on random samples") {
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(20, 9), b = random_rational(20, 9),
                       c = random_rational(20, 9);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero())
            CHECK(a * a.inverse() == Rational(1));
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("param field canonical form and axioms") {
    const ParamField d = ParamField::param(Param::Delta), x = ParamField::param(Param::X);
    CHECK((d * d - x * x) / (d - x) == d + x);
    CHECK((d / x) * (x / d) == ParamField(1));
    CHECK(((d + 1) / (d + 1)).is_one());
    CHECK_THROWS(d / ParamField(0));
    for (int i = 0; i < 30; ++i) {
        const ParamField a = random_param_field(), b = random_param_field(),
                         c = random_param_field();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero())
            CHECK(a * (ParamField(1) / a) == ParamField(1));
    }
}

TEST_CASE("ratfun_arith examples") {
    const RationalFunction one(1);
    const RationalFunction diff = ratfun_arith(one / (one - Z()), one / Z(), RatFunOp::Sub);
    CHECK(diff == (RationalFunction(2) * Z() - one) / (Z() * (one - Z())));
    CHECK(ratfun_arith(one / Z(), {}, RatFunOp::Differentiate) == -one / (Z() * Z()));
    CHECK((Z() * Z() - one) / (Z() - one) == Z() + one);
    CHECK(ratfun_arith(Z(), Z(), RatFunOp::Add) == RationalFunction(2) * Z());
    CHECK(ratfun_arith(Z(), Z(), RatFunOp::Mul) == Z() * Z());
    CHECK(ratfun_arith(Z(), Z(), RatFunOp::Div) == one);
    CHECK_THROWS_AS(ratfun_arith(Z(), RationalFunction(0), RatFunOp::Div), std::domain_error);
}

TEST_CASE("rational functions with parameters") {
    const RationalFunction f = D() * Z() / (X() * (Z() - RationalFunction(1)));
    CHECK(f.substitute(Param::Delta, Rational(0)).is_zero());
    CHECK(f == D() * Z() / (X() * Z() - X()));
    CHECK(f.denominator().degree() == 1);
    CHECK(((D() * Z() - X() * Z()) / (D() - X())) == Z());
    CHECK(f.derivative() ==
          -D() / (X() * (Z() - RationalFunction(1)) * (Z() - RationalFunction(1))));
}

TEST_CASE("differentiation obeys the Leibniz rule") {
    for (int i = 0; i < 20; ++i) {
        const RationalFunction f = random_ratfun(), g = random_ratfun();
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
        CHECK((f + g).derivative() == f.derivative() + g.derivative());
    }
}

TEST_CASE("jacobi_mul examples") {
    const JacobiSeries one_plus_q({{ex(0), 1}, {ex(1), 1}}, Rational(1));
    const JacobiSeries one_minus_q({{ex(0), 1}, {ex(1), -1}}, Rational(1));
    const JacobiSeries prod = jacobi_mul(one_plus_q, one_minus_q);
    CHECK(prod.terms() == JacobiSeries::Terms{{ex(0), 1}});
    CHECK(prod.q_cutoff() == Rational(1));

    const JacobiSeries a = JacobiSeries::monomial(ex(Rational(1, 2), 1));
    const JacobiSeries b = JacobiSeries::monomial(ex(Rational(1, 2), -1));
    CHECK(jacobi_mul(a, b).terms() == JacobiSeries::Terms{{ex(1, 0), 1}});

    CHECK(jacobi_mul(one_plus_q, JacobiSeries()).empty());
}

TEST_CASE("jacobi_equal_to_cutoff examples") {
    const JacobiSeries a({{ex(0), 1}, {ex(1), 1}}, Rational(3));
    const JacobiSeries b({{ex(0), 1}, {ex(1), 2}}, Rational(3));
    const JacobiSeries c({{ex(0), 1}, {ex(1), 1}, {ex(3), 5}}, Rational(3));
    CHECK(jacobi_equal_to_cutoff(a, a, Rational(3)));
    CHECK_FALSE(jacobi_equal_to_cutoff(a, b, Rational(1)));
    CHECK(jacobi_equal_to_cutoff(a, c, Rational(2)));
    CHECK_THROWS_AS(jacobi_equal_to_cutoff(a, c, Rational(4)), std::invalid_argument);
}

TEST_CASE("jacobi_mul is commutative and associative on the common window") {
    auto random_series = [] {
        JacobiSeries::Terms t;
        const Rational base = random_rational(3, 2);
        for (int i = 0; i < 6; ++i)
            t[ex(base + Rational(uniform(0, 4), 2), Rational(uniform(-2, 2)),
                 Rational(uniform(-1, 1)))] += uniform(-3, 3);
        return JacobiSeries(t, base + Rational(uniform(1, 4)));
    };
    for (int i = 0; i < 50; ++i) {
        const JacobiSeries a = random_series(), b = random_series(), c = random_series();
        CHECK(jacobi_mul(a, b) == jacobi_mul(b, a));
        const JacobiSeries l = jacobi_mul(jacobi_mul(a, b), c);
        const JacobiSeries r = jacobi_mul(a, jacobi_mul(b, c));
        const Rational lim = min(*l.q_limit(), *r.q_limit());
        CHECK(l.truncated(lim) == r.truncated(lim));
    }
}

TEST_CASE("checked integer arithmetic") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK(checked_mul(-3, 4) == -12);
}

TEST_CASE("rational matrices") {
    QMatrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(0, 2) = 1;
    CHECK(m.rank() == 2);
    const QMatrix ns = m.nullspace();
    CHECK(ns.cols() == 1);
    CHECK((m * ns).is_zero());
    CHECK(kron(QMatrix::identity(2), QMatrix::identity(3)) == QMatrix::identity(6));
    Rational s;
    CHECK((Rational(3) * QMatrix::identity(3)).is_scalar(&s));
    CHECK(s == Rational(3));
}
