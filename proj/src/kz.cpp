#include "gl11/kz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gl11 {

namespace {

RationalFunction z() { return RationalFunction::z(); }
RationalFunction one_minus_z() { return RationalFunction(1) - z(); }
RationalFunction delta() { return RationalFunction::param(Param::Delta); }
RationalFunction xpar() { return RationalFunction::param(Param::X); }

RationalFunction diagonal_term() {
    return RationalFunction(2) * delta() *
           (RationalFunction(1) / one_minus_z() - RationalFunction(1) / z());
}

} // namespace

SecondOrderOde SecondOrderOde::normalized() const {
    if (a2.is_zero())
        throw std::domain_error("leading coefficient vanishes");
    const RationalFunction scale = z() * one_minus_z() / a2;
    return {z() * one_minus_z(), a1 * scale, a0 * scale};
}

SecondOrderOde SecondOrderOde::substitute(Param p, const Rational &value) const {
    return {a2.substitute(p, value), a1.substitute(p, value), a0.substitute(p, value)};
}

std::string SecondOrderOde::str() const {
    return "(" + a2.str() + ") phi'' + (" + a1.str() + ") phi' + (" + a0.str() +
           ") phi";
}

FirstOrderSystem build_first_order_system() {
    const RationalFunction d = diagonal_term();
    FirstOrderSystem s;
    s.m[0][0] = d;
    s.m[0][1] = -xpar() / one_minus_z();
    s.m[1][0] = xpar() / z();
    s.m[1][1] = d;
    return s;
}

SecondOrderOde eliminate_to_second_order(const FirstOrderSystem &sys) {
    const auto &m = sys.m;
    if (m[1][0].is_zero())
        throw std::domain_error("M[1][0] = 0: phi1 cannot be eliminated");
    // phi1 = a phi3' + b phi3, then phi1' = M00 phi1 + M01 phi3.
    const RationalFunction a = RationalFunction(1) / m[1][0];
    const RationalFunction b = -m[1][1] / m[1][0];
    SecondOrderOde ode{a, a.derivative() + b - m[0][0] * a,
                       b.derivative() - m[0][0] * b - m[0][1]};
    return ode.normalized();
}

SecondOrderOde main_equation_reference() {
    const RationalFunction d = delta(), x = xpar();
    const RationalFunction four_d = RationalFunction(4) * d;
    return {z() * one_minus_z(),
            (four_d + RationalFunction(1)) -
                (RationalFunction(8) * d + RationalFunction(1)) * z(),
            four_d * d / z() +
                RationalFunction(2) * d * (RationalFunction(2) * d - RationalFunction(1)) /
                    one_minus_z() +
                x * x - RationalFunction(16) * d * d};
}

SecondOrderOde hypergeometric_reference() {
    return {z() * one_minus_z(), one_minus_z(), xpar() * xpar()};
}

Vanish1Relations Vanish1Relations::standard() {
    const RationalFunction d = delta();
    const RationalFunction two_d = RationalFunction(2) * d;
    return {-two_d, -z(), -two_d / one_minus_z() + two_d + xpar(), diagonal_term(),
            xpar()};
}

Vanish1Relations Vanish1Relations::substitute(Param p, const Rational &value) const {
    return {first_phi.substitute(p, value), first_dphi.substitute(p, value),
            first_rhs.substitute(p, value), second.substitute(p, value),
            expected.substitute(p, value)};
}

Vanish1Result verify_vanish1(const Vanish1Relations &rel) {
    Vanish1Result r;
    r.residue = rel.first_rhs - (rel.first_phi + rel.first_dphi * rel.second);
    r.holds = r.residue == rel.expected;
    r.degenerate = r.residue.is_zero();
    return r;
}

SecondOrderOde transport_ode(const SecondOrderOde &ode, const RationalFunction &p) {
    // phi = g f with g'/g = h.
    const RationalFunction h = -p / z() + p / one_minus_z();
    return {ode.a2, ode.a1 + RationalFunction(2) * h * ode.a2,
            ode.a0 + ode.a1 * h + ode.a2 * (h.derivative() + h * h)};
}

bool check_transform(const RationalFunction &exponent) {
    const SecondOrderOde phi_ode = eliminate_to_second_order(build_first_order_system());
    return transport_ode(phi_ode, exponent).normalized() == hypergeometric_reference();
}

namespace {

Hyp2f1Result gauss_sum(double x, double tol) {
    // Partial sums at N0 2^j; the error expands in powers of 1/N.
    constexpr std::size_t kN0 = 64;
    constexpr int kMaxRows = 16;
    constexpr int kMaxOrder = 8;
    std::vector<std::vector<double>> table;
    long double sum = 1.0L, term = 1.0L;
    std::size_t n = 0, target = kN0;
    Hyp2f1Result res;
    double best = 0, best_gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < kMaxRows; ++j, target *= 2) {
        while (n < target) {
            const long double m = static_cast<long double>(n);
            term *= (m * m - static_cast<long double>(x) * x) / ((m + 1) * (m + 1));
            sum += term;
            ++n;
        }
        std::vector<double> row{static_cast<double>(sum)};
        for (int k = 1; k <= std::min(j, kMaxOrder); ++k) {
            const double f = std::ldexp(1.0, k);
            row.push_back((f * row[static_cast<std::size_t>(k - 1)] -
                           table.back()[static_cast<std::size_t>(k - 1)]) /
                          (f - 1));
        }
        table.push_back(row);
        if (j >= 2) {
            const double cur = table[static_cast<std::size_t>(j)].back();
            const double prev = table[static_cast<std::size_t>(j - 1)].back();
            const double gap = std::abs(cur - prev);
            if (gap < best_gap) {
                best_gap = gap;
                best = cur;
            }
            if (gap < tol)
                break;
        }
    }
    const double nn = static_cast<double>(n);
    res.value = best;
    res.terms = n;
    res.tail_bound = best_gap;
    res.n2_term_bound = nn * nn * static_cast<double>(std::abs(term));
    return res;
}

} // namespace

Hyp2f1Result hyp2f1(double x, double zv, double tol) {
    if (!(tol > 0))
        throw std::invalid_argument("tolerance must be positive");
    if (std::isnan(zv) || std::isnan(x))
        throw std::domain_error("hyp2f1: NaN argument");
    if (zv == 1.0)
        return gauss_sum(x, tol);
    const double az = std::abs(zv);
    if (az >= 1.0)
        throw std::domain_error("hyp2f1: series diverges for |z| >= 1, z != 1");

    Hyp2f1Result r;
    double c = 1.0;      // coefficient of z^n
    double zn1 = 0.0;    // z^{n-1}
    double zn2 = 0.0;    // z^{n-2}
    double zn = 1.0;     // z^n
    r.value = 1.0;
    const double denom = std::pow(1.0 - az, 3);
    for (std::size_t n = 1;; ++n) {
        const double m = static_cast<double>(n - 1);
        c *= (m * m - x * x) / ((m + 1) * (m + 1));
        zn2 = zn1;
        zn1 = zn;
        zn *= zv;
        const double nd = static_cast<double>(n);
        r.value += c * zn;
        r.d1 += nd * c * zn1;
        if (n >= 2)
            r.d2 += nd * (nd - 1) * c * zn2;
        const double bound = 2.0 * (nd + 2) * (nd + 2) * std::abs(c * zn) / denom;
        if (c == 0.0 || bound < tol) {
            r.terms = n + 1;
            r.tail_bound = bound;
            return r;
        }
    }
}

std::vector<double> gauss_scaled_terms(double x, std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    double t = 1.0;
    for (std::size_t n = 1; n <= count; ++n) {
        const double m = static_cast<double>(n - 1);
        t *= (m * m - x * x) / ((m + 1) * (m + 1));
        const double nd = static_cast<double>(n);
        out.push_back(nd * nd * std::abs(t));
    }
    return out;
}

double rigidity_constant(const Rational &x, double tol) {
    if (x.is_integer())
        throw std::domain_error("rigidity constant undefined for integral x = " +
                                x.str());
    return hyp2f1(x.to_double(), 1.0, tol).value;
}

double closed_form(const Rational &x) {
    if (x.is_zero())
        return 1.0;
    const double px = std::numbers::pi * x.to_double();
    return std::sin(px) / px;
}

double ode_residual(const Rational &x, const Rational &delta_value, double zv) {
    constexpr double guard = 10 * std::numeric_limits<double>::epsilon();
    if (!(zv > guard && zv < 1.0 - guard))
        throw std::domain_error("ode_residual: z must lie strictly inside (0, 1)");
    // Every phi^(k) is g times a combination of f, f', f'', so the equation is
    // g * bracket. The bracket cancels heavily; it is evaluated in 256-bit
    // floats because g reaches 1e8 at z = 0.1, |Delta| = 4.
    constexpr mp_bitcnt_t bits = 256;
    const mpf_class z(zv, bits), w(mpf_class(1, bits) - z);
    const mpf_class xf(x.raw(), bits), d(delta_value.raw(), bits);
    const mpf_class eps("1e-60", bits);

    mpf_class f(0, bits), f1(0, bits), f2(0, bits), t(1, bits);
    for (long n = 0;; ++n) {
        f += t;
        f1 += n * t;
        f2 += n * (n - 1) * t;
        t *= (n + xf) * (n - xf) / ((n + 1) * (n + 1)) * z;
        if (n > std::abs(x.to_double()) + 2 && abs(t) * (n + 1) * (n + 1) < eps)
            break;
    }
    f1 /= z;
    f2 /= z * z;

    const mpf_class h = -2 * d / z + 2 * d / w;
    const mpf_class dh = 2 * d / (z * z) + 2 * d / (w * w);
    const mpf_class a1 = (4 * d + 1) - (8 * d + 1) * z;
    const mpf_class a0 = 4 * d * d / z + 2 * d * (2 * d - 1) / w + xf * xf - 16 * d * d;
    const mpf_class bracket = z * w * (f2 + 2 * h * f1 + (dh + h * h) * f) + a1 * (f1 + h * f) + a0 * f;

    const double dd = delta_value.to_double();
    const double g = std::pow(zv, -2 * dd) * std::pow(1.0 - zv, -2 * dd);
    return g * std::abs(bracket.get_d());
}

} // namespace gl11
