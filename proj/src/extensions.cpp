#include "gl11/extensions.hpp"

#include "gl11/characters.hpp"
#include "gl11/fusion.hpp"

#include <stdexcept>

namespace gl11 {

ExtensionSpec ExtensionSpec::sl21_minus_half() {
    return ExtensionSpec(Kind::Sl21MinusHalf, Rational(1, 2), -2);
}

ExtensionSpec ExtensionSpec::sl21_level1() {
    return ExtensionSpec(Kind::Sl21Level1, Rational(1, 2), 1);
}

ExtensionSpec ExtensionSpec::custom(const Rational &a, std::int64_t b) {
    ExtensionSpec e(Kind::Custom, a, b);
    const Rational weight = delta(ModuleLabel::atypical(a, b));
    if (Rational(b).abs() > Rational(2) * weight)
        e.warnings_.push_back("|b| exceeds twice the generator weight " + weight.str());
    if (!(Rational(2) * (a - Rational(1, 2)) * Rational(b)).is_integer())
        e.warnings_.push_back("2(a - 1/2) b is not an integer");
    return e;
}

std::string ExtensionSpec::name() const {
    switch (kind_) {
    case Kind::Sl21MinusHalf:
        return "sl21-neg-half";
    case Kind::Sl21Level1:
        return "sl21-level1";
    case Kind::Custom:
        break;
    }
    return "custom:" + a_.str() + "," + std::to_string(b_);
}

ModuleLabel ExtensionSpec::generator_of(std::int64_t m) const {
    const Rational mm(static_cast<long>(m));
    return ModuleLabel::atypical(mm * (a_ - epsilon(b_)) + epsilon(m * b_), m * b_);
}

namespace {

ModuleLabel single_label(const FormalSum &f) {
    const ModuleLabel *l = f.single();
    if (l == nullptr)
        throw std::logic_error("fusion with a simple current is not a single label: " +
                               render(f));
    return *l;
}

void require_simple(const ModuleLabel &s) {
    if (!s.is_simple())
        throw std::invalid_argument(render(s) + " is not simple");
}

bool half_odd(const Rational &r) { return !r.is_integer() && (Rational(2) * r).is_integer(); }

} // namespace

Rational monodromy_exponent(const ModuleLabel &s, const ModuleLabel &c) {
    const FormalSum f = fuse(s, c);
    const ModuleLabel *l = f.single();
    if (l == nullptr || !l->is_simple())
        throw std::invalid_argument("fusion " + render(s) + " x " + render(c) +
                                    " is not a single simple label");
    return delta(*l) - delta(s) - delta(c);
}

bool is_local(const ModuleLabel &s, const ExtensionSpec &ext) {
    require_simple(s);
    return monodromy_exponent(s, ext.generator_of(1)).is_integer() &&
           monodromy_exponent(s, ext.generator_of(-1)).is_integer();
}

bool is_local_closed_form(const ModuleLabel &s, const ExtensionSpec &ext) {
    require_simple(s);
    const Rational &n = s.n();
    switch (ext.kind()) {
    case ExtensionSpec::Kind::Sl21MinusHalf:
        if (s.is_typical())
            return (Rational(2) * n + s.ehat()).is_integer();
        return (Rational(2) * n).is_integer();
    case ExtensionSpec::Kind::Sl21Level1:
        if (s.is_typical())
            return half_odd(n + s.ehat());
        return s.ell() == 0 ? n.is_integer() : half_odd(n);
    case ExtensionSpec::Kind::Custom:
        break;
    }
    throw std::invalid_argument("no closed-form locality criterion for " + ext.name());
}

std::vector<ModuleLabel> induce(const ModuleLabel &s, const ExtensionSpec &ext,
                                std::int64_t m_range) {
    if (m_range < 0)
        throw std::invalid_argument("negative m range");
    std::vector<ModuleLabel> out;
    for (std::int64_t m = -m_range; m <= m_range; ++m)
        out.push_back(single_label(fuse(s, ext.generator_of(m))));
    return out;
}

bool induced_equivalent(const ModuleLabel &s, const ModuleLabel &s2,
                        const ExtensionSpec &ext) {
    require_simple(s);
    require_simple(s2);
    const ModuleLabel target = s2.with_parity_flip(false);
    // e/k shifts by m b and, when b = 0, n shifts by m a.
    Rational m;
    if (ext.b() != 0) {
        m = (s2.ehat() - s.ehat()) / Rational(static_cast<long>(ext.b()));
    } else if (!ext.a().is_zero()) {
        m = (s2.n() - s.n()) / ext.a();
    }
    if (!m.is_integer())
        return false;
    return single_label(fuse(s, ext.generator_of(m.to_int64()))) == target;
}

std::vector<ModuleLabel> induced_projective_cover(const ModuleLabel &s,
                                                  const ExtensionSpec &ext,
                                                  std::int64_t m_range) {
    if (!is_local(s, ext))
        throw std::invalid_argument(render(s) + " is not local for " + ext.name());
    return induce(projective_cover(s), ext, m_range);
}

std::string to_string(GrowthClass c) {
    switch (c) {
    case GrowthClass::RelaxedFlat:
        return "relaxed_flat";
    case GrowthClass::SpectralFlowUnbounded:
        return "spectral_flow_unbounded";
    case GrowthClass::LowestWeight:
        break;
    }
    return "lowest_weight";
}

namespace {

struct Quadratic {
    Rational c2, c1, c0;
    Rational at(const Rational &m) const { return (c2 * m + c1) * m + c0; }
};

// Exact quadratic through (m0 + i d, w_i), i = 0, 1, 2, checked at i = 3.
Quadratic fit_branch(const ModuleLabel &s, const ExtensionSpec &ext, std::int64_t m0,
                     std::int64_t d) {
    Rational w[4];
    for (int i = 0; i < 4; ++i)
        w[i] = delta(single_label(fuse(s, ext.generator_of(m0 + i * d))));
    const Rational x0(static_cast<long>(m0));
    const Rational h(static_cast<long>(d));
    const Rational c2 = (w[2] - Rational(2) * w[1] + w[0]) / (Rational(2) * h * h);
    const Rational slope = (w[1] - w[0]) / h; // c2 (2 x0 + h) + c1
    const Rational c1 = slope - c2 * (Rational(2) * x0 + h);
    const Rational c0 = w[0] - (c2 * x0 + c1) * x0;
    Quadratic q{c2, c1, c0};
    if (q.at(x0 + Rational(3) * h) != w[3])
        throw std::logic_error("conformal weights of the induction are not quadratic in m");
    return q;
}

} // namespace

WeightGrowth weight_growth(const ModuleLabel &s, const ExtensionSpec &ext) {
    require_simple(s);
    const std::int64_t ell = s.is_typical() ? 0 : s.ell();
    const std::int64_t start = (ell < 0 ? -ell : ell) + 2;
    const Quadratic pos = fit_branch(s, ext, start, 1);
    const Quadratic neg = fit_branch(s, ext, -start, -1);
    if (pos.c2 != neg.c2)
        throw std::logic_error("asymmetric quadratic growth");
    WeightGrowth g{pos.c2, pos.c1, neg.c1, GrowthClass::SpectralFlowUnbounded};
    if (g.quadratic_coeff.sign() > 0)
        g.classification = GrowthClass::LowestWeight;
    else if (g.quadratic_coeff.is_zero() && pos.c1.is_zero() && neg.c1.is_zero())
        g.classification = GrowthClass::RelaxedFlat;
    else if (g.quadratic_coeff.is_zero() && pos.c1.sign() > 0 && neg.c1.sign() < 0)
        g.classification = GrowthClass::LowestWeight;
    return g;
}

JacobiSeries induced_character(const Rational &n, const Rational &ehat, int m_range,
                               const Rational &q_cutoff) {
    InducedCharacter c = char_induced_typical(n, ehat, m_range, q_cutoff);
    if (c.lhs.terms() != c.rhs.terms())
        throw std::logic_error("induced character identity fails");
    return c.lhs;
}

} // namespace gl11
