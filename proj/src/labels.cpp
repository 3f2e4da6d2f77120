#include "gl11/labels.hpp"

#include "gl11/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace gl11 {

namespace {

Rational integral(std::int64_t v) { return Rational(static_cast<long>(v)); }

std::string kind_name(ModuleLabel::Kind k) {
    switch (k) {
    case ModuleLabel::Kind::Typical:
        return "V";
    case ModuleLabel::Kind::Atypical:
        return "A";
    case ModuleLabel::Kind::Verma:
        return "Verma0";
    case ModuleLabel::Kind::Projective:
        return "P";
    }
    return "?";
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

} // namespace

ModuleLabel ModuleLabel::typical(Rational n, Rational ehat) {
    if (ehat.is_integer())
        throw std::invalid_argument("e/k = " + ehat.str() +
                                    " is an integer: not a typical module");
    return ModuleLabel(Kind::Typical, std::move(n), std::move(ehat));
}

ModuleLabel ModuleLabel::atypical(Rational n, std::int64_t ell) {
    return ModuleLabel(Kind::Atypical, std::move(n), integral(ell));
}

ModuleLabel ModuleLabel::verma(Rational n, std::int64_t ell) {
    return ModuleLabel(Kind::Verma, std::move(n), integral(ell));
}

ModuleLabel ModuleLabel::projective(Rational n, std::int64_t ell) {
    return ModuleLabel(Kind::Projective, std::move(n), integral(ell));
}

std::int64_t ModuleLabel::ell() const {
    if (kind_ == Kind::Typical)
        throw std::logic_error("typical label has no integral e/k");
    return ehat_.to_int64();
}

ModuleLabel ModuleLabel::with_parity_flip(bool flip) const {
    ModuleLabel copy = *this;
    copy.parity_flip_ = flip;
    return copy;
}

std::string render(const ModuleLabel &label) {
    return (label.parity_flip() ? "Pi" : "") + kind_name(label.kind()) + "(" +
           label.n().str() + ";" + label.ehat().str() + ")";
}

ModuleLabel parse_label(std::string_view text) {
    std::string s = trim(text);
    bool flip = false;
    if (s.rfind("Pi", 0) == 0) {
        flip = true;
        s.erase(0, 2);
    }
    const auto open = s.find('(');
    const auto semi = s.find(';');
    if (open == std::string::npos || semi == std::string::npos ||
        semi < open || s.back() != ')')
        throw ParseError("malformed label '" + std::string(text) +
                         "': expected KIND(n;e)");
    const std::string kind = s.substr(0, open);
    const Rational n = Rational::parse(trim(s.substr(open + 1, semi - open - 1)));
    const Rational w =
        Rational::parse(trim(s.substr(semi + 1, s.size() - semi - 2)));

    auto need_integer = [&](const char *what) {
        if (!w.is_integer())
            throw ParseError(std::string(what) + " label '" +
                             std::string(text) + "' needs an integer e/k");
        return w.to_int64();
    };
    ModuleLabel label = ModuleLabel::atypical(0, 0);
    if (kind == "V") {
        if (w.is_integer())
            throw ParseError("label '" + std::string(text) + "': e/k = " +
                             w.str() + " is an integer, so V is not typical");
        label = ModuleLabel::typical(n, w);
    } else if (kind == "A") {
        label = ModuleLabel::atypical(n, need_integer("atypical"));
    } else if (kind == "P") {
        label = ModuleLabel::projective(n, need_integer("projective"));
    } else if (kind == "Verma0") {
        label = ModuleLabel::verma(n, need_integer("Verma"));
    } else {
        throw ParseError("unknown label kind '" + kind + "' in '" +
                         std::string(text) + "'");
    }
    return label.with_parity_flip(flip);
}

void FormalSum::add(const ModuleLabel &label, std::int64_t mult) {
    if (mult < 0)
        throw std::invalid_argument("formal sums take nonnegative multiplicities");
    if (mult == 0)
        return;
    terms_[label] += mult;
}

FormalSum &FormalSum::operator+=(const FormalSum &o) {
    for (const auto &[label, m] : o.terms_)
        add(label, m);
    return *this;
}

FormalSum FormalSum::scaled(std::int64_t factor) const {
    FormalSum r;
    for (const auto &[label, m] : terms_)
        r.add(label, m * factor);
    return r;
}

std::int64_t FormalSum::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto &[label, m] : terms_)
        t += m;
    return t;
}

std::int64_t FormalSum::multiplicity(const ModuleLabel &label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
}

const ModuleLabel *FormalSum::single() const {
    if (terms_.size() != 1 || terms_.begin()->second != 1)
        return nullptr;
    return &terms_.begin()->first;
}

std::string render(const FormalSum &sum) {
    std::string out;
    for (const auto &[label, m] : sum.terms()) {
        if (!out.empty())
            out += " + ";
        if (m != 1)
            out += std::to_string(m) + "*";
        out += render(label);
    }
    return out.empty() ? "0" : out;
}

Rational epsilon(std::int64_t ell) {
    if (ell > 0)
        return Rational(1, 2);
    if (ell < 0)
        return Rational(-1, 2);
    return Rational(0);
}

Rational epsilon2(std::int64_t ell, std::int64_t ell2) {
    return epsilon(ell) + epsilon(ell2) - epsilon(ell + ell2);
}

Rational delta_formula(const Rational &n, const Rational &ehat) {
    return ehat * (n + ehat / Rational(2));
}

Rational delta(const ModuleLabel &label) {
    const Rational &w = label.ehat();
    if (label.kind() == ModuleLabel::Kind::Projective && !w.is_zero()) {
        // P_{m,l} sits between V_{m,l} and V_{m - 2 eps(l), l}.
        const Rational other = label.n() - Rational(2) * epsilon(label.ell());
        return min(delta_formula(label.n(), w), delta_formula(other, w));
    }
    return delta_formula(label.n(), w);
}

int top_dim(const ModuleLabel &label) {
    switch (label.kind()) {
    case ModuleLabel::Kind::Typical:
    case ModuleLabel::Kind::Verma:
        return 2;
    case ModuleLabel::Kind::Atypical:
        return label.ehat().is_zero() ? 1 : 2;
    case ModuleLabel::Kind::Projective:
        return label.ehat().is_zero() ? 4 : 2;
    }
    return 0;
}

ModuleLabel spectral_flow(const ModuleLabel &label, std::int64_t ell) {
    if (ell == 0)
        return label;
    const Rational l = integral(ell);
    const Rational half(1, 2);
    switch (label.kind()) {
    case ModuleLabel::Kind::Verma:
        return ModuleLabel::verma(label.n() - l, label.ell() + ell)
            .with_parity_flip(label.parity_flip());
    case ModuleLabel::Kind::Typical:
        throw Undetermined("spectral flow of a typical module (e/k = " +
                           label.ehat().str() + ") is not determined");
    case ModuleLabel::Kind::Projective:
        if (label.ell() != 0)
            throw Undetermined("spectral flow is only determined on P_{n,0}");
        if (ell < 0)
            return ModuleLabel::projective(label.n() - l - half, ell);
        return ModuleLabel::projective(-label.n() - l + half, ell);
    case ModuleLabel::Kind::Atypical:
        if (label.ell() != 0)
            throw Undetermined("spectral flow is only determined on A_{n,0}");
        if (ell > 0)
            throw Undetermined(
                "spectral flow of A_{n,0} is only determined for l < 0");
        return ModuleLabel::atypical(label.n() - l - half, ell);
    }
    throw std::logic_error("unreachable");
}

ModuleLabel contragredient(const ModuleLabel &label) {
    switch (label.kind()) {
    case ModuleLabel::Kind::Atypical:
        return ModuleLabel::atypical(-label.n(), -label.ell())
            .with_parity_flip(label.parity_flip());
    case ModuleLabel::Kind::Typical:
        return ModuleLabel::typical(-label.n(), -label.ehat())
            .with_parity_flip(!label.parity_flip());
    case ModuleLabel::Kind::Projective:
        if (label.ell() == 0)
            return ModuleLabel::projective(-label.n(), 0)
                .with_parity_flip(label.parity_flip());
        throw Undetermined("contragredient of P_{n,l} with l != 0 is not determined");
    case ModuleLabel::Kind::Verma:
        throw Undetermined("contragredient of a reducible Verma module is not determined");
    }
    throw std::logic_error("unreachable");
}

ModuleLabel projective_cover(const ModuleLabel &label) {
    switch (label.kind()) {
    case ModuleLabel::Kind::Typical:
        return label;
    case ModuleLabel::Kind::Atypical:
        return ModuleLabel::projective(label.n(), label.ell())
            .with_parity_flip(label.parity_flip());
    default:
        throw std::invalid_argument("projective cover requested for non-simple " +
                                    render(label));
    }
}

FormalSum k_decompose(const ModuleLabel &label) {
    const Rational half(1, 2), one(1);
    const Rational &n = label.n();
    switch (label.kind()) {
    case ModuleLabel::Kind::Typical:
    case ModuleLabel::Kind::Atypical:
        return FormalSum(label.with_parity_flip(false));
    case ModuleLabel::Kind::Verma: {
        const std::int64_t l = label.ell();
        FormalSum s;
        if (l == 0) {
            s.add(ModuleLabel::atypical(n - half, 0));
            s.add(ModuleLabel::atypical(n + half, 0));
        } else {
            s.add(ModuleLabel::atypical(n, l));
            s.add(ModuleLabel::atypical(n + (l > 0 ? one : -one), l));
        }
        return s;
    }
    case ModuleLabel::Kind::Projective: {
        const std::int64_t l = label.ell();
        FormalSum s;
        s.add(ModuleLabel::atypical(n, l), 2);
        s.add(ModuleLabel::atypical(n + one, l));
        s.add(ModuleLabel::atypical(n - one, l));
        return s;
    }
    }
    throw std::logic_error("unreachable");
}

FormalSum k_decompose(const FormalSum &sum) {
    FormalSum out;
    for (const auto &[label, m] : sum.terms())
        out += k_decompose(label).scaled(m);
    return out;
}

} // namespace gl11
