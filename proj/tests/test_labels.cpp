#include "gl11/errors.hpp"
#include "gl11/labels.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gl11;
using namespace gl11::testing;

namespace {

ModuleLabel A(Rational n, std::int64_t l) { return ModuleLabel::atypical(std::move(n), l); }
ModuleLabel V(Rational n, Rational e) { return ModuleLabel::typical(std::move(n), std::move(e)); }
ModuleLabel P(Rational n, std::int64_t l) { return ModuleLabel::projective(std::move(n), l); }
ModuleLabel V0(Rational n, std::int64_t l) { return ModuleLabel::verma(std::move(n), l); }

ModuleLabel random_label() {
    switch (uniform(0, 3)) {
    case 0:
        return random_typical();
    case 1:
        return random_atypical();
    case 2:
        return random_projective();
    default:
        return V0(random_rational(), random_ell());
    }
}

} // namespace

TEST_CASE("delta examples") {
    CHECK(delta(V(1, Rational(1, 2))) == Rational(5, 8));
    CHECK(delta(A(Rational(7, 3), 0)) == 0);
    CHECK(delta(A(Rational(-1, 2), 1)) == 0);
    CHECK(delta_formula(Rational(1, 4), Rational(1, 2)) == Rational(1, 4));
    // P_{n,l} takes the lower of its two Verma constituents.
    CHECK(delta(P(1, 1)) == min(delta_formula(1, 1), delta_formula(0, 1)));
    CHECK(delta(P(0, -2)) == min(delta_formula(0, -2), delta_formula(1, -2)));
}

TEST_CASE("epsilon examples and symmetry") {
    CHECK(epsilon(3) == Rational(1, 2));
    CHECK(epsilon(0) == 0);
    CHECK(epsilon(-4) == Rational(-1, 2));
    CHECK(epsilon2(1, -1) == 0);
    CHECK(epsilon2(1, 1) == Rational(1, 2));
    for (std::int64_t l = -6; l <= 6; ++l) {
        CHECK(epsilon2(l, 0) == 0);
        for (std::int64_t l2 = -6; l2 <= 6; ++l2)
            CHECK(epsilon2(l, l2) == epsilon2(l2, l));
    }
}

TEST_CASE("spectral flow") {
    const Rational n = Rational(2, 3);
    for (const ModuleLabel &x : {V0(n, 0), A(n, 0), P(n, 0)})
        CHECK(spectral_flow(x, 0) == x);
    CHECK(spectral_flow(P(n, 0), -1) == P(n + Rational(1, 2), -1));
    CHECK(spectral_flow(V0(n, 0), -1) == V0(n + 1, -1));
    CHECK(spectral_flow(V0(n, 0), 2) == V0(n - 2, 2));
    CHECK(spectral_flow(P(n, 0), 2) == P(-n - 2 + Rational(1, 2), 2));
    CHECK(spectral_flow(A(n, 0), -2) == A(n + 2 - Rational(1, 2), -2));
    CHECK_THROWS_AS(spectral_flow(V(0, Rational(1, 2)), 1), Undetermined);
    CHECK_THROWS_AS(spectral_flow(A(0, 1), -1), Undetermined);
    CHECK_THROWS_AS(spectral_flow(A(0, 0), 1), Undetermined);
    CHECK_THROWS_AS(spectral_flow(P(0, 1), -1), Undetermined);
    for (int i = 0; i < 50; ++i) {
        const ModuleLabel v = V0(random_rational(), 0);
        const std::int64_t l = random_ell(5);
        CHECK(spectral_flow(spectral_flow(v, l), -l) == v);
    }
}

TEST_CASE("flowed atypicals match the flowed exact sequence") {
    // [sigma^l V_{n,0}] = [sigma^l A_{n-1/2,0}] + [sigma^l A_{n+1/2,0}] for l < 0.
    for (int i = 0; i < 30; ++i) {
        const Rational n = random_rational();
        const std::int64_t l = -uniform(1, 4);
        FormalSum flowed;
        flowed.add(spectral_flow(A(n - Rational(1, 2), 0), l));
        flowed.add(spectral_flow(A(n + Rational(1, 2), 0), l));
        CHECK(k_decompose(spectral_flow(V0(n, 0), l)) == flowed);
    }
}

TEST_CASE("contragredient") {
    CHECK(contragredient(A(0, 0)) == A(0, 0));
    CHECK(contragredient(V(Rational(1, 4), Rational(1, 2))) ==
          V(Rational(-1, 4), Rational(-1, 2)).with_parity_flip(true));
    CHECK(contragredient(P(2, 0)) == P(-2, 0));
    CHECK(contragredient(A(Rational(1, 2), 3)) == A(Rational(-1, 2), -3));
    CHECK_THROWS_AS(contragredient(P(0, 1)), Undetermined);
    CHECK_THROWS_AS(contragredient(V0(0, 0)), Undetermined);
    for (int i = 0; i < 100; ++i) {
        ModuleLabel x = uniform(0, 2) == 0 ? random_typical()
                        : uniform(0, 1)    ? random_atypical()
                                           : P(random_rational(), 0);
        CHECK(contragredient(contragredient(x)) == x);
        CHECK(delta(contragredient(x)) == delta(x));
    }
}

TEST_CASE("projective covers") {
    CHECK(projective_cover(V(1, Rational(1, 3))) == V(1, Rational(1, 3)));
    CHECK(projective_cover(A(Rational(5, 2), 0)) == P(Rational(5, 2), 0));
    CHECK(projective_cover(A(Rational(1, 2), -2)) == P(Rational(1, 2), -2));
    CHECK_THROWS_AS(projective_cover(P(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(projective_cover(V0(0, 0)), std::invalid_argument);
}

TEST_CASE("composition factors") {
    FormalSum v00;
    v00.add(A(Rational(-1, 2), 0));
    v00.add(A(Rational(1, 2), 0));
    CHECK(k_decompose(V0(0, 0)) == v00);

    const Rational n(3, 4);
    FormalSum v1;
    v1.add(A(n, 1));
    v1.add(A(n + 1, 1));
    CHECK(k_decompose(V0(n, 1)) == v1);
    FormalSum vm;
    vm.add(A(n, -2));
    vm.add(A(n - 1, -2));
    CHECK(k_decompose(V0(n, -2)) == vm);

    for (std::int64_t l : {0, 2, -1}) {
        FormalSum p;
        p.add(A(n, l), 2);
        p.add(A(n + 1, l));
        p.add(A(n - 1, l));
        CHECK(k_decompose(P(n, l)) == p);
    }
    CHECK(k_decompose(V(0, Rational(1, 2))) == FormalSum(V(0, Rational(1, 2))));
}

TEST_CASE("composition factor counts and top dimensions") {
    for (int i = 0; i < 200; ++i) {
        const ModuleLabel x = random_label();
        const FormalSum f = k_decompose(x);
        const std::int64_t expected = x.is_simple() ? 1 : x.kind() == ModuleLabel::Kind::Verma ? 2 : 4;
        CHECK(f.total_multiplicity() == expected);
        int dims = 0;
        for (const auto &[label, m] : f.terms())
            dims += static_cast<int>(m) * top_dim(label);
        CHECK(dims >= top_dim(x));
    }
}

TEST_CASE("top dimensions") {
    CHECK(top_dim(A(3, 0)) == 1);
    CHECK(top_dim(P(0, 0)) == 4);
    CHECK(top_dim(A(Rational(1, 2), 2)) == 2);
    CHECK(top_dim(V(0, Rational(1, 3))) == 2);
    CHECK(top_dim(P(0, -1)) == 2);
}

TEST_CASE("label text round trip") {
    CHECK(parse_label("V(1/4;1/2)") == V(Rational(1, 4), Rational(1, 2)));
    CHECK(parse_label("A(-1/2;1)") == A(Rational(-1, 2), 1));
    CHECK(parse_label(" P(0;0) ") == P(0, 0));
    CHECK(parse_label("Verma0(1;-2)") == V0(1, -2));
    CHECK(parse_label("PiV(1;1/3)").parity_flip());
    CHECK(render(A(Rational(-1, 2), 1)) == "A(-1/2;1)");
    CHECK_THROWS_AS(parse_label("V(0;2)"), ParseError);
    CHECK_THROWS_AS(parse_label("A(0;1/2)"), ParseError);
    CHECK_THROWS_AS(parse_label("Q(0;1)"), ParseError);
    CHECK_THROWS_AS(parse_label("A(0,1)"), ParseError);
    CHECK_THROWS_AS(parse_label("A(x;1)"), ParseError);
    for (int i = 0; i < 200; ++i) {
        ModuleLabel x = random_label();
        if (uniform(0, 3) == 0)
            x = x.with_parity_flip(true);
        CHECK(parse_label(render(x)) == x);
    }
}

TEST_CASE("typical labels reject integral weights") {
    CHECK_THROWS_AS(ModuleLabel::typical(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(V(0, 1).ell(), std::logic_error);
}

TEST_CASE("formal sums") {
    FormalSum s;
    s.add(A(0, 0), 2);
    s.add(A(0, 0));
    s.add(A(1, 0), 0);
    CHECK(s.size() == 1);
    CHECK(s.multiplicity(A(0, 0)) == 3);
    CHECK(s.single() == nullptr);
    CHECK(s.scaled(2).total_multiplicity() == 6);
    CHECK(render(s) == "3*A(0;0)");
    CHECK_THROWS_AS(s.add(A(0, 0), -1), std::invalid_argument);
}
