#pragma once

#include "gl11/rational.hpp"
#include "gl11/rational_function.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gl11 {

/// (phi1', phi3') = M(z) (phi1, phi3), entries over the formal parameters
/// Delta and x.
struct FirstOrderSystem {
    std::array<std::array<RationalFunction, 2>, 2> m;
};

/// a2 phi'' + a1 phi' + a0 phi = 0.
struct SecondOrderOde {
    RationalFunction a2, a1, a0;
    friend bool operator==(const SecondOrderOde &, const SecondOrderOde &) = default;
    /// Rescaled so that a2 = z(1-z). Throws std::domain_error if a2 = 0.
    SecondOrderOde normalized() const;
    SecondOrderOde substitute(Param p, const Rational &value) const;
    std::string str() const;
};

FirstOrderSystem build_first_order_system();

/// ODE for phi3 after solving the second row for phi1. Throws
/// std::domain_error if M[1][0] = 0.
SecondOrderOde eliminate_to_second_order(const FirstOrderSystem &sys);

/// z(1-z) phi'' + ((4D+1) - (8D+1) z) phi'
///   + (4D^2/z + 2D(2D-1)/(1-z) + x^2 - 16 D^2) phi = 0.
SecondOrderOde main_equation_reference();
/// z(1-z) f'' + (1-z) f' + x^2 f = 0.
SecondOrderOde hypergeometric_reference();

/// Two scalar relations on a single function phi:
///   first_phi * phi + first_dphi * phi' = first_rhs * phi
///   phi' = second * phi
/// Substituting the second into the first must leave expected * phi = 0.
struct Vanish1Relations {
    RationalFunction first_phi, first_dphi, first_rhs, second, expected;
    static Vanish1Relations standard();
    Vanish1Relations substitute(Param p, const Rational &value) const;
};

struct Vanish1Result {
    bool holds = false;
    bool degenerate = false; // residue is identically zero
    RationalFunction residue;
};

Vanish1Result verify_vanish1(const Vanish1Relations &rel = Vanish1Relations::standard());

/// ODE satisfied by f = z^p (1-z)^p phi when phi solves `ode`.
SecondOrderOde transport_ode(const SecondOrderOde &ode, const RationalFunction &p);

/// True iff transporting the eliminated equation with exponent p yields
/// the hypergeometric equation. The default exponent is 2 Delta.
bool check_transform(const RationalFunction &exponent =
                         RationalFunction(2) * RationalFunction::param(Param::Delta));

struct Hyp2f1Result {
    double value = 0, d1 = 0, d2 = 0; // F, F', F'' (derivatives only for |z| < 1)
    std::size_t terms = 0;
    double tail_bound = 0;
    /// z = 1 only: C with |t_n| <= C / n^2 for every n beyond the summed range.
    double n2_term_bound = 0;
};

/// 2F1(x, -x; 1; z) for real |z| < 1, or z = 1. Throws std::domain_error
/// when the series does not converge and std::invalid_argument for tol <= 0.
Hyp2f1Result hyp2f1(double x, double z, double tol);

/// n^2 |t_n| for the z = 1 series, n = 1 .. count.
std::vector<double> gauss_scaled_terms(double x, std::size_t count);

/// 2F1(x, -x; 1; 1). Throws std::domain_error for integral x.
double rigidity_constant(const Rational &x, double tol);
/// sin(pi x) / (pi x).
double closed_form(const Rational &x);

/// |LHS| of the main equation evaluated on
/// phi = z^{-2 Delta} (1-z)^{-2 Delta} 2F1(x, -x; 1; z).
/// Throws std::domain_error within 10 machine epsilons of 0 or 1.
double ode_residual(const Rational &x, const Rational &delta, double z);

} // namespace gl11
