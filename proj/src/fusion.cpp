#include "gl11/fusion.hpp"

#include "gl11/errors.hpp"

#include <stdexcept>

namespace gl11 {

namespace {

using Kind = ModuleLabel::Kind;

const Rational kHalf(1, 2);
const Rational kOne(1);

FormalSum atypical_atypical(const ModuleLabel &a, const ModuleLabel &b) {
    const auto l = a.ell(), l2 = b.ell();
    return FormalSum(
        ModuleLabel::atypical(a.n() + b.n() - epsilon2(l, l2), l + l2));
}

FormalSum atypical_typical(const ModuleLabel &a, const ModuleLabel &v) {
    const auto l = a.ell();
    return FormalSum(ModuleLabel::typical(a.n() + v.n() - epsilon(l),
                                          v.ehat() + Rational(static_cast<long>(l))));
}

FormalSum typical_typical(const ModuleLabel &a, const ModuleLabel &b) {
    const Rational s = a.ehat() + b.ehat();
    const Rational n = a.n() + b.n();
    if (!s.is_integer()) {
        FormalSum r;
        r.add(ModuleLabel::typical(n + kHalf, s));
        r.add(ModuleLabel::typical(n - kHalf, s));
        return r;
    }
    if (s.is_zero())
        return FormalSum(ModuleLabel::projective(n, 0));
    if (b.ehat().is_integer())
        throw Undetermined("fusion not determined: e/k + e'/k is a nonzero "
                           "integer with e'/k integral");
    const auto l = s.to_int64();
    return FormalSum(ModuleLabel::projective(n + epsilon(l), l));
}

FormalSum atypical_projective(const ModuleLabel &a, const ModuleLabel &p) {
    const auto l = a.ell(), l2 = p.ell();
    return FormalSum(
        ModuleLabel::projective(a.n() + p.n() - epsilon2(l, l2), l + l2));
}

FormalSum typical_projective(const ModuleLabel &v, const ModuleLabel &p) {
    const auto l = p.ell();
    const Rational base = v.n() + p.n() - epsilon(l);
    const Rational e = v.ehat() + Rational(static_cast<long>(l));
    FormalSum r;
    r.add(ModuleLabel::typical(base + kOne, e));
    r.add(ModuleLabel::typical(base, e), 2);
    r.add(ModuleLabel::typical(base - kOne, e));
    return r;
}

FormalSum projective_projective(const ModuleLabel &a, const ModuleLabel &b) {
    const auto l = a.ell(), l2 = b.ell();
    const Rational base = a.n() + b.n() - epsilon2(l, l2);
    FormalSum r;
    r.add(ModuleLabel::projective(base + kOne, l + l2));
    r.add(ModuleLabel::projective(base, l + l2), 2);
    r.add(ModuleLabel::projective(base - kOne, l + l2));
    return r;
}

} // namespace

FormalSum fuse(const ModuleLabel &a, const ModuleLabel &b) {
    if (a.kind() == Kind::Verma || b.kind() == Kind::Verma)
        throw Undetermined("fusion not determined for reducible Verma input (" +
                           render(a) + " x " + render(b) + ")");
    // Order the pair as Atypical <= Typical <= Projective.
    auto rank = [](Kind k) {
        switch (k) {
        case Kind::Atypical:
            return 0;
        case Kind::Typical:
            return 1;
        default:
            return 2;
        }
    };
    const bool swap = rank(a.kind()) > rank(b.kind());
    const ModuleLabel &x = swap ? b : a;
    const ModuleLabel &y = swap ? a : b;
    switch (rank(x.kind()) * 3 + rank(y.kind())) {
    case 0:
        return atypical_atypical(x, y);
    case 1:
        return atypical_typical(x, y);
    case 2:
        return atypical_projective(x, y);
    case 4:
        return typical_typical(x, y);
    case 5:
        return typical_projective(x, y);
    case 8:
        return projective_projective(x, y);
    }
    throw std::logic_error("unreachable fusion case");
}

FormalSum fuse_formal(const FormalSum &a, const FormalSum &b) {
    FormalSum out;
    for (const auto &[la, ma] : a.terms())
        for (const auto &[lb, mb] : b.terms())
            out += fuse(la, lb).scaled(ma * mb);
    return out;
}

bool k_ring_check(const ModuleLabel &a, const ModuleLabel &b) {
    const FormalSum direct = k_decompose(fuse(a, b));
    const FormalSum factorwise =
        k_decompose(fuse_formal(k_decompose(a), k_decompose(b)));
    return direct == factorwise;
}

FinLabel top_space(const ModuleLabel &label, const Rational &k) {
    const Rational &n = label.n();
    switch (label.kind()) {
    case Kind::Typical:
    case Kind::Verma:
        return FinLabel::verma(n, label.ehat() * k);
    case Kind::Atypical:
        if (label.ehat().is_zero())
            return FinLabel::atypical(n);
        // The quotient keeps the two-dimensional top of V_{n,lk}.
        return FinLabel::verma(n, label.ehat() * k);
    case Kind::Projective: {
        if (label.ehat().is_zero())
            return FinLabel::projective(n);
        const Rational lower = n - Rational(2) * epsilon(label.ell());
        return FinLabel::verma(lower, label.ehat() * k);
    }
    }
    throw std::logic_error("unreachable");
}

FinMultiset top_space(const FormalSum &sum, const Rational &k) {
    FinMultiset out;
    for (const auto &[label, m] : sum.terms())
        out[top_space(label, k)] += static_cast<int>(m);
    return out;
}

} // namespace gl11
