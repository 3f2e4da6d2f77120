#pragma once

// Finite-dimensional gl(1|1) modules as explicit matrices, and a brute-force
// decomposition of their tensor products. Used to certify top-space
// statements of the fusion rules independently of the label arithmetic.

#include "gl11/qmatrix.hpp"
#include "gl11/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace gl11 {

enum class Parity : unsigned char { Even = 0, Odd = 1 };
inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned char>(a) ^
                               static_cast<unsigned char>(b));
}

/// Basis {N, E, psi+, psi-} of gl(1|1); N, E even, psi+- odd.
enum class Gl11Basis : std::size_t { N = 0, E = 1, PsiPlus = 2, PsiMinus = 3 };
inline constexpr std::array<Gl11Basis, 4> kGl11Basis = {
    Gl11Basis::N, Gl11Basis::E, Gl11Basis::PsiPlus, Gl11Basis::PsiMinus};

/// Element of gl(1|1) in coordinates on (N, E, psi+, psi-).
struct AlgebraElement {
    std::array<Rational, 4> coeffs{};

    static AlgebraElement basis(Gl11Basis b);
    Rational &operator[](Gl11Basis b) { return coeffs[static_cast<std::size_t>(b)]; }
    const Rational &operator[](Gl11Basis b) const {
        return coeffs[static_cast<std::size_t>(b)];
    }
    friend AlgebraElement operator+(const AlgebraElement &a, const AlgebraElement &b);
    friend AlgebraElement operator*(const Rational &s, const AlgebraElement &a);
    friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;
};

/// Structure data of gl(1|1).
struct Gl11Algebra {
    static Parity parity(Gl11Basis b);
    /// Super bracket of basis elements.
    static AlgebraElement bracket(Gl11Basis a, Gl11Basis b);
    /// Bilinear extension of the super bracket to arbitrary elements.
    static AlgebraElement bracket(const AlgebraElement &a, const AlgebraElement &b);
    /// kappa(N,E) = kappa(E,N) = 1, kappa(psi+,psi-) = -kappa(psi-,psi+) = 1.
    static const QMatrix &kappa();
    /// kappa_2(N,N) = 1, zero elsewhere.
    static const QMatrix &kappa2();
    static Rational form(const QMatrix &gram, const AlgebraElement &a,
                         const AlgebraElement &b);
    /// kappa([a,b],c) == kappa(a,[b,c]) on all basis triples.
    static bool kappa_is_invariant();
};

/// The automorphism N -> N + lambda E, psi+- -> mu psi+-, E -> mu^2 E.
/// Throws std::invalid_argument for mu = 0.
AlgebraElement apply_automorphism(const Rational &lambda, const Rational &mu,
                                  const AlgebraElement &a);

/// Finite-dimensional module names: the Verma module V_{n,e} (highest
/// weight vector of N-eigenvalue n + 1/2), the one-dimensional A_n, and the
/// four-dimensional projective P_n. `n` is the average N-eigenvalue.
struct FinLabel {
    enum class Kind : unsigned char { Verma, Atypical, Projective };
    Kind kind = Kind::Atypical;
    Rational n;
    Rational e; // zero for Atypical and Projective

    static FinLabel verma(Rational n, Rational e) { return {Kind::Verma, std::move(n), std::move(e)}; }
    static FinLabel atypical(Rational n) { return {Kind::Atypical, std::move(n), Rational(0)}; }
    static FinLabel projective(Rational n) { return {Kind::Projective, std::move(n), Rational(0)}; }

    bool irreducible() const { return kind != Kind::Verma || !e.is_zero(); }
    std::string str() const;
    friend auto operator<=>(const FinLabel &, const FinLabel &) = default;
    friend bool operator==(const FinLabel &, const FinLabel &) = default;
};

using FinMultiset = std::map<FinLabel, int>;

/// Explicit matrix realization of a gl(1|1)-module on a homogeneous basis.
class Gl11MatrixModule {
  public:
    Gl11MatrixModule(std::vector<Parity> parity, std::array<QMatrix, 4> action);

    std::size_t dimension() const { return parity_.size(); }
    const std::vector<Parity> &parity() const { return parity_; }
    const QMatrix &action(Gl11Basis b) const {
        return action_[static_cast<std::size_t>(b)];
    }
    QMatrix action(const AlgebraElement &a) const;

    /// Names of violated relations; empty iff this is a gl(1|1)-module whose
    /// even generators preserve and odd generators reverse parity.
    std::vector<std::string> relation_violations() const;
    bool satisfies_relations() const { return relation_violations().empty(); }

  private:
    std::vector<Parity> parity_;
    std::array<QMatrix, 4> action_;
};

Gl11MatrixModule realize(const FinLabel &label);

/// Graded tensor product: X acts as X (x) 1 + (-1)^{|X||v|} 1 (x) X.
Gl11MatrixModule tensor(const Gl11MatrixModule &a, const Gl11MatrixModule &b);

/// Distinct eigenvalues of a matrix that is diagonalizable over Q, in
/// increasing order. Throws std::domain_error otherwise.
std::vector<Rational> rational_semisimple_spectrum(const QMatrix &m);

/// Decomposes a module with semisimple N and E into Verma, atypical and
/// projective summands by matching rank statistics against candidate
/// multisets. Throws std::domain_error for non-semisimple actions and for
/// statistics no candidate (or more than one) reproduces.
FinMultiset decompose(const Gl11MatrixModule &m);

/// Zero-mode L_0 on a top space at level k:
/// (1/k)(N E - psi+ psi-) + (1/2k) E + (1/2k^2) E^2.
QMatrix l0_top_matrix(const Gl11MatrixModule &m, const Rational &k);

std::string render(const FinMultiset &s);

} // namespace gl11
