#include "gl11/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gl11;
using gl11::testing::random_rational;
using gl11::testing::random_typical_ehat;
using gl11::testing::uniform;

namespace {

// Eigenvalues of a diagonal matrix as a sorted list (with repetition).
std::vector<Rational> diagonal_of(const QMatrix &m) {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < m.rows(); ++i)
        d.push_back(m(i, i));
    std::sort(d.begin(), d.end());
    return d;
}

bool is_diagonal(const QMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero())
                return false;
    return true;
}

FinMultiset single(const FinLabel &l) { return {{l, 1}}; }

FinLabel random_fin_label() {
    switch (uniform(0, 2)) {
    case 0: {
        Rational e = random_rational();
        if (e.is_zero())
            e = Rational(1, 3);
        return FinLabel::verma(random_rational(), e);
    }
    case 1:
        return FinLabel::atypical(random_rational());
    default:
        return FinLabel::projective(random_rational());
    }
}

} // namespace

TEST_CASE("gl(1|1) structure data") {
    using B = Gl11Basis;
    CHECK(Gl11Algebra::bracket(B::N, B::PsiPlus) == AlgebraElement::basis(B::PsiPlus));
    CHECK(Gl11Algebra::bracket(B::N, B::PsiMinus) ==
          Rational(-1) * AlgebraElement::basis(B::PsiMinus));
    CHECK(Gl11Algebra::bracket(B::PsiPlus, B::PsiMinus) == AlgebraElement::basis(B::E));
    CHECK(Gl11Algebra::bracket(B::PsiMinus, B::PsiPlus) == AlgebraElement::basis(B::E));
    CHECK(Gl11Algebra::bracket(B::PsiPlus, B::PsiPlus) == AlgebraElement{});
    for (B b : kGl11Basis)
        CHECK(Gl11Algebra::bracket(B::E, b) == AlgebraElement{});
    CHECK(Gl11Algebra::kappa_is_invariant());
    const QMatrix &k = Gl11Algebra::kappa();
    CHECK(k(0, 1) == Rational(1));
    CHECK(k(1, 0) == Rational(1));
    CHECK(k(2, 3) == Rational(1));
    CHECK(k(3, 2) == Rational(-1));
    CHECK(Gl11Algebra::kappa2()(0, 0) == Rational(1));
}

TEST_CASE("realize examples") {
    const Gl11MatrixModule a0 = realize(FinLabel::atypical(0));
    CHECK(a0.dimension() == 1);
    for (Gl11Basis b : kGl11Basis)
        CHECK(a0.action(b).is_zero());

    const Gl11MatrixModule v = realize(FinLabel::verma(Rational(1, 2), 1));
    CHECK(v.action(Gl11Basis::N) == QMatrix::diagonal({1, 0}));
    CHECK(v.action(Gl11Basis::E) == QMatrix::identity(2));
    // psi+ psi- v = v
    CHECK((v.action(Gl11Basis::PsiPlus) * v.action(Gl11Basis::PsiMinus))(0, 0) == Rational(1));
    CHECK(v.parity() == std::vector<Parity>{Parity::Even, Parity::Odd});

    const Gl11MatrixModule p = realize(FinLabel::projective(0));
    CHECK(p.dimension() == 4);
    CHECK(p.action(Gl11Basis::E).is_zero());
    CHECK(is_diagonal(p.action(Gl11Basis::N)));
    CHECK(diagonal_of(p.action(Gl11Basis::N)) == std::vector<Rational>{-1, 0, 0, 1});
}

TEST_CASE("realized and tensored modules satisfy the relations") {
    for (int i = 0; i < 40; ++i) {
        const FinLabel a = random_fin_label(), b = random_fin_label();
        const Gl11MatrixModule ma = realize(a), mb = realize(b);
        CHECK(ma.satisfies_relations());
        const Gl11MatrixModule t = tensor(ma, mb);
        CHECK(t.dimension() == ma.dimension() * mb.dimension());
        CHECK(t.satisfies_relations());
    }
}

TEST_CASE("relation checker rejects a broken module") {
    Gl11MatrixModule v = realize(FinLabel::verma(0, 1));
    std::array<QMatrix, 4> act;
    for (Gl11Basis b : kGl11Basis)
        act[static_cast<std::size_t>(b)] = v.action(b);
    act[static_cast<std::size_t>(Gl11Basis::E)] = QMatrix::diagonal({1, 2});
    CHECK_FALSE(Gl11MatrixModule(v.parity(), act).satisfies_relations());
}

TEST_CASE("tensor examples") {
    // Unit.
    for (int i = 0; i < 10; ++i) {
        const FinLabel l = random_fin_label();
        CHECK(decompose(tensor(realize(FinLabel::atypical(0)), realize(l))) == single(l));
    }
    const FinLabel v = FinLabel::verma(Rational(1, 2), 1);
    const Gl11MatrixModule vv = tensor(realize(v), realize(v));
    CHECK(vv.action(Gl11Basis::E) == Rational(2) * QMatrix::identity(4));
    // The N-spectrum is {2,1,1,0}: diagonal in the product basis.
    CHECK(is_diagonal(vv.action(Gl11Basis::N)));
    CHECK(diagonal_of(vv.action(Gl11Basis::N)) == std::vector<Rational>{0, 1, 1, 2});
}

TEST_CASE("decompose examples") {
    const FinLabel v = FinLabel::verma(Rational(1, 2), 1);
    CHECK(decompose(tensor(realize(v), realize(v))) ==
          FinMultiset{{FinLabel::verma(Rational(3, 2), 2), 1},
                      {FinLabel::verma(Rational(1, 2), 2), 1}});
    for (int i = 0; i < 20; ++i) {
        const Rational n = random_rational(), e = random_typical_ehat();
        CHECK(decompose(tensor(realize(FinLabel::verma(n, e)), realize(FinLabel::verma(-n, -e)))) ==
              single(FinLabel::projective(0)));
    }
}

TEST_CASE("decompose inverts realize") {
    for (int i = 0; i < 100; ++i) {
        const FinLabel l = random_fin_label();
        CHECK(decompose(realize(l)) == single(l));
    }
    // Reducible Verma modules are recognised too.
    CHECK(decompose(realize(FinLabel::verma(Rational(1, 2), 0))) ==
          single(FinLabel::verma(Rational(1, 2), 0)));
}

TEST_CASE("decompose reproduces the finite tensor rules") {
    for (int i = 0; i < 30; ++i) {
        const Rational n = random_rational(), n2 = random_rational();
        const Rational e = random_typical_ehat();
        Rational e2 = random_typical_ehat();
        if ((e + e2).is_zero())
            e2 += Rational(1, 7);
        CHECK(decompose(tensor(realize(FinLabel::verma(n, e)), realize(FinLabel::verma(n2, e2)))) ==
              FinMultiset{{FinLabel::verma(n + n2 + Rational(1, 2), e + e2), 1},
                          {FinLabel::verma(n + n2 - Rational(1, 2), e + e2), 1}});
        CHECK(decompose(tensor(realize(FinLabel::verma(n, e)), realize(FinLabel::verma(n2, -e)))) ==
              single(FinLabel::projective(n + n2)));
        CHECK(decompose(tensor(realize(FinLabel::atypical(n)), realize(FinLabel::verma(n2, e)))) ==
              single(FinLabel::verma(n + n2, e)));
        CHECK(decompose(tensor(realize(FinLabel::atypical(n)), realize(FinLabel::atypical(n2)))) ==
              single(FinLabel::atypical(n + n2)));
    }
}

TEST_CASE("decompose rejects non-semisimple input") {
    const Gl11MatrixModule p = realize(FinLabel::projective(0));
    std::array<QMatrix, 4> act;
    for (Gl11Basis b : kGl11Basis)
        act[static_cast<std::size_t>(b)] = p.action(b);
    // N + psi+ psi- is no longer diagonalizable.
    act[0] = p.action(Gl11Basis::N) + p.action(Gl11Basis::PsiPlus) * p.action(Gl11Basis::PsiMinus);
    CHECK_THROWS_AS(decompose(Gl11MatrixModule(p.parity(), act)), std::domain_error);
}

TEST_CASE("l0 on top spaces") {
    for (int i = 0; i < 30; ++i) {
        const Rational n = random_rational(), e = random_typical_ehat();
        Rational value;
        CHECK(l0_top_matrix(realize(FinLabel::verma(n, e)), 1).is_scalar(&value));
        CHECK(value == e * (n + e / Rational(2)));
    }
    const QMatrix l = l0_top_matrix(realize(FinLabel::projective(0)), 1);
    CHECK_FALSE(l.is_zero());
    CHECK((l * l).is_zero());
    CHECK(l.rank() == 1);
    CHECK(l0_top_matrix(realize(FinLabel::atypical(Rational(3, 2))), 1).is_zero());
    CHECK_THROWS_AS(l0_top_matrix(realize(FinLabel::atypical(0)), 0), std::invalid_argument);
}

TEST_CASE("l0 commutes with N and E") {
    for (int i = 0; i < 30; ++i) {
        const Gl11MatrixModule m = realize(random_fin_label());
        Rational k = random_rational();
        if (k.is_zero())
            k = 1;
        const QMatrix l = l0_top_matrix(m, k);
        for (Gl11Basis b : {Gl11Basis::N, Gl11Basis::E})
            CHECK(l * m.action(b) == m.action(b) * l);
    }
}

TEST_CASE("automorphisms") {
    using B = Gl11Basis;
    for (B b : kGl11Basis)
        CHECK(apply_automorphism(0, 1, AlgebraElement::basis(b)) == AlgebraElement::basis(b));
    const QMatrix &kappa = Gl11Algebra::kappa();
    const QMatrix &kappa2 = Gl11Algebra::kappa2();
    for (B a : kGl11Basis)
        for (B b : kGl11Basis) {
            const AlgebraElement x = AlgebraElement::basis(a), y = AlgebraElement::basis(b);
            const Rational lhs = Gl11Algebra::form(kappa, apply_automorphism(1, 2, x),
                                                   apply_automorphism(1, 2, y));
            CHECK(lhs == Rational(4) * Gl11Algebra::form(kappa, x, y) +
                             Rational(2) * Gl11Algebra::form(kappa2, x, y));
            const Rational lam = 3, mu(1, 2);
            CHECK(apply_automorphism(lam, mu, Gl11Algebra::bracket(x, y)) ==
                  Gl11Algebra::bracket(apply_automorphism(lam, mu, x),
                                       apply_automorphism(lam, mu, y)));
        }
    CHECK_THROWS_AS(apply_automorphism(1, 0, AlgebraElement::basis(B::N)), std::invalid_argument);
}
