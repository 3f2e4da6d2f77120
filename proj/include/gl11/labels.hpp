#pragma once

// Isomorphism-class labels for modules of the affine gl(1|1) vertex
// superalgebra in KL_k / O_k^fin, and the label-level operations on them.
//
// All labels carry (n, e/k); the level itself never enters a formula.

#include "gl11/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gl11 {

class ModuleLabel {
  public:
    enum class Kind : unsigned char {
        Typical,    // simple generalized Verma V_{n,e}, e/k not an integer
        Atypical,   // simple quotient A_{n, l k}
        Verma,      // reducible generalized Verma V_{n, l k}
        Projective, // projective cover P_{n, l k}
    };

    /// Throws std::invalid_argument if ehat is an integer.
    static ModuleLabel typical(Rational n, Rational ehat);
    static ModuleLabel atypical(Rational n, std::int64_t ell);
    static ModuleLabel verma(Rational n, std::int64_t ell);
    static ModuleLabel projective(Rational n, std::int64_t ell);

    Kind kind() const { return kind_; }
    const Rational &n() const { return n_; }
    /// e/k for every kind (an integer for all but Typical).
    const Rational &ehat() const { return ehat_; }
    /// Requires kind() != Typical.
    std::int64_t ell() const;
    bool parity_flip() const { return parity_flip_; }
    ModuleLabel with_parity_flip(bool flip) const;

    bool is_simple() const { return kind_ == Kind::Typical || kind_ == Kind::Atypical; }
    bool is_typical() const { return kind_ == Kind::Typical; }

    friend auto operator<=>(const ModuleLabel &, const ModuleLabel &) = default;
    friend bool operator==(const ModuleLabel &, const ModuleLabel &) = default;

  private:
    ModuleLabel(Kind kind, Rational n, Rational ehat)
        : kind_(kind), n_(std::move(n)), ehat_(std::move(ehat)) {}

    Kind kind_;
    Rational n_;
    Rational ehat_;
    bool parity_flip_ = false;
};

/// Canonical text: "V(1/4;1/2)", "A(-1/2;1)", "P(0;0)", "Verma0(1;-2)", with
/// a "Pi" prefix for the parity-reversed module.
std::string render(const ModuleLabel &label);
/// Inverse of render. Throws ParseError on malformed text and on a typical
/// label with integral e/k.
ModuleLabel parse_label(std::string_view text);

/// Multiset of labels with positive multiplicities.
class FormalSum {
  public:
    using Map = std::map<ModuleLabel, std::int64_t>;

    FormalSum() = default;
    FormalSum(const ModuleLabel &label, std::int64_t mult = 1) { add(label, mult); }

    void add(const ModuleLabel &label, std::int64_t mult = 1);
    FormalSum &operator+=(const FormalSum &o);
    friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
    FormalSum scaled(std::int64_t factor) const;

    const Map &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::int64_t total_multiplicity() const;
    std::int64_t multiplicity(const ModuleLabel &label) const;
    bool contains(const ModuleLabel &label) const { return terms_.count(label) > 0; }
    /// The only label, if this is a single label with multiplicity one.
    const ModuleLabel *single() const;

    friend bool operator==(const FormalSum &, const FormalSum &) = default;

  private:
    Map terms_;
};

std::string render(const FormalSum &sum);

/// epsilon(l) = 1/2, 0, -1/2 for l > 0, = 0, < 0.
Rational epsilon(std::int64_t ell);
/// epsilon(l) + epsilon(l') - epsilon(l + l').
Rational epsilon2(std::int64_t ell, std::int64_t ell2);

/// Delta_{n,e} = ehat (n + ehat / 2).
Rational delta_formula(const Rational &n, const Rational &ehat);

/// Lowest conformal weight. For a projective with l != 0 this is the lower
/// weight of its two Verma constituents.
Rational delta(const ModuleLabel &label);

/// Dimension of the lowest-conformal-weight space.
int top_dim(const ModuleLabel &label);

/// Spectral flow sigma^l at label level. Defined on e/k = 0 sources; Verma
/// labels with integral e/k are also accepted since sigma^a sigma^l =
/// sigma^{a+l}. Atypical sources only for l <= 0. Throws Undetermined
/// otherwise.
ModuleLabel spectral_flow(const ModuleLabel &label, std::int64_t ell);

/// Contragredient module; defined for A, V (typical) and P_{n,0}.
ModuleLabel contragredient(const ModuleLabel &label);

/// Typicals cover themselves; A_{n,l} is covered by P_{n,l}.
ModuleLabel projective_cover(const ModuleLabel &label);

/// Composition factors (with multiplicity) in the Grothendieck group.
FormalSum k_decompose(const ModuleLabel &label);
FormalSum k_decompose(const FormalSum &sum);

} // namespace gl11
