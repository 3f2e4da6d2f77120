#include "gl11/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gl11 {

namespace {

constexpr std::size_t idx(Gl11Basis b) { return static_cast<std::size_t>(b); }

QMatrix gram_from(std::initializer_list<std::tuple<Gl11Basis, Gl11Basis, int>> entries) {
    QMatrix g(4, 4);
    for (auto [a, b, v] : entries)
        g(idx(a), idx(b)) = v;
    return g;
}

} // namespace

AlgebraElement AlgebraElement::basis(Gl11Basis b) {
    AlgebraElement a;
    a[b] = 1;
    return a;
}

AlgebraElement operator+(const AlgebraElement &a, const AlgebraElement &b) {
    AlgebraElement r;
    for (std::size_t i = 0; i < 4; ++i)
        r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return r;
}

AlgebraElement operator*(const Rational &s, const AlgebraElement &a) {
    AlgebraElement r;
    for (std::size_t i = 0; i < 4; ++i)
        r.coeffs[i] = s * a.coeffs[i];
    return r;
}

Parity Gl11Algebra::parity(Gl11Basis b) {
    return (b == Gl11Basis::PsiPlus || b == Gl11Basis::PsiMinus) ? Parity::Odd
                                                                 : Parity::Even;
}

AlgebraElement Gl11Algebra::bracket(Gl11Basis a, Gl11Basis b) {
    using B = Gl11Basis;
    AlgebraElement r;
    if (a == B::N && b == B::PsiPlus)
        r[B::PsiPlus] = 1;
    else if (a == B::PsiPlus && b == B::N)
        r[B::PsiPlus] = -1;
    else if (a == B::N && b == B::PsiMinus)
        r[B::PsiMinus] = -1;
    else if (a == B::PsiMinus && b == B::N)
        r[B::PsiMinus] = 1;
    else if ((a == B::PsiPlus && b == B::PsiMinus) ||
             (a == B::PsiMinus && b == B::PsiPlus))
        r[B::E] = 1;
    return r;
}

AlgebraElement Gl11Algebra::bracket(const AlgebraElement &a,
                                    const AlgebraElement &b) {
    AlgebraElement r;
    for (auto x : kGl11Basis)
        for (auto y : kGl11Basis)
            if (!a[x].is_zero() && !b[y].is_zero())
                r = r + (a[x] * b[y]) * bracket(x, y);
    return r;
}

const QMatrix &Gl11Algebra::kappa() {
    using B = Gl11Basis;
    static const QMatrix k = gram_from({{B::N, B::E, 1},
                                        {B::E, B::N, 1},
                                        {B::PsiPlus, B::PsiMinus, 1},
                                        {B::PsiMinus, B::PsiPlus, -1}});
    return k;
}

const QMatrix &Gl11Algebra::kappa2() {
    static const QMatrix k = gram_from({{Gl11Basis::N, Gl11Basis::N, 1}});
    return k;
}

Rational Gl11Algebra::form(const QMatrix &gram, const AlgebraElement &a,
                           const AlgebraElement &b) {
    Rational s;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            s += a.coeffs[i] * gram(i, j) * b.coeffs[j];
    return s;
}

bool Gl11Algebra::kappa_is_invariant() {
    for (auto a : kGl11Basis)
        for (auto b : kGl11Basis)
            for (auto c : kGl11Basis) {
                auto lhs = form(kappa(), bracket(a, b), AlgebraElement::basis(c));
                auto rhs = form(kappa(), AlgebraElement::basis(a), bracket(b, c));
                if (lhs != rhs)
                    return false;
            }
    return true;
}

AlgebraElement apply_automorphism(const Rational &lambda, const Rational &mu,
                                  const AlgebraElement &a) {
    if (mu.is_zero())
        throw std::invalid_argument("automorphism requires mu != 0");
    using B = Gl11Basis;
    AlgebraElement r;
    r[B::N] = a[B::N];
    r[B::E] = lambda * a[B::N] + mu * mu * a[B::E];
    r[B::PsiPlus] = mu * a[B::PsiPlus];
    r[B::PsiMinus] = mu * a[B::PsiMinus];
    return r;
}

std::string FinLabel::str() const {
    switch (kind) {
    case Kind::Verma:
        return "v(" + n.str() + ";" + e.str() + ")";
    case Kind::Atypical:
        return "a(" + n.str() + ";0)";
    case Kind::Projective:
        return "p(" + n.str() + ";0)";
    }
    return "?";
}

Gl11MatrixModule::Gl11MatrixModule(std::vector<Parity> parity,
                                   std::array<QMatrix, 4> action)
    : parity_(std::move(parity)), action_(std::move(action)) {
    for (const auto &m : action_)
        if (m.rows() != parity_.size() || m.cols() != parity_.size())
            throw std::invalid_argument("action matrix has wrong shape");
}

QMatrix Gl11MatrixModule::action(const AlgebraElement &a) const {
    QMatrix m(dimension(), dimension());
    for (auto b : kGl11Basis)
        if (!a[b].is_zero())
            m += a[b] * action(b);
    return m;
}

std::vector<std::string> Gl11MatrixModule::relation_violations() const {
    std::vector<std::string> bad;
    const std::size_t d = dimension();
    for (auto b : kGl11Basis) {
        const QMatrix &m = action(b);
        const bool odd = Gl11Algebra::parity(b) == Parity::Odd;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!m(i, j).is_zero() && ((parity_[i] != parity_[j]) != odd)) {
                    bad.push_back("parity of generator " +
                                  std::to_string(idx(b)));
                    i = d;
                    break;
                }
    }
    for (auto a : kGl11Basis)
        for (auto b : kGl11Basis) {
            const QMatrix &ma = action(a), &mb = action(b);
            const bool both_odd = Gl11Algebra::parity(a) == Parity::Odd &&
                                  Gl11Algebra::parity(b) == Parity::Odd;
            QMatrix lhs = both_odd ? ma * mb + mb * ma : ma * mb - mb * ma;
            if (lhs != action(Gl11Algebra::bracket(a, b)))
                bad.push_back("bracket [" + std::to_string(idx(a)) + "," +
                              std::to_string(idx(b)) + "]");
        }
    return bad;
}

Gl11MatrixModule realize(const FinLabel &label) {
    using B = Gl11Basis;
    switch (label.kind) {
    case FinLabel::Kind::Atypical: {
        QMatrix n(1, 1);
        n(0, 0) = label.n;
        return Gl11MatrixModule({Parity::Even},
                                {n, QMatrix(1, 1), QMatrix(1, 1), QMatrix(1, 1)});
    }
    case FinLabel::Kind::Verma: {
        // basis (v, psi- v)
        const Rational half(1, 2);
        QMatrix n = QMatrix::diagonal({label.n + half, label.n - half});
        QMatrix e = label.e * QMatrix::identity(2);
        QMatrix pp(2, 2), pm(2, 2);
        pm(1, 0) = 1;       // psi- v = second basis vector
        pp(0, 1) = label.e; // psi+ psi- v = e v
        std::array<QMatrix, 4> act;
        act[idx(B::N)] = n;
        act[idx(B::E)] = e;
        act[idx(B::PsiPlus)] = pp;
        act[idx(B::PsiMinus)] = pm;
        return Gl11MatrixModule({Parity::Even, Parity::Odd}, std::move(act));
    }
    case FinLabel::Kind::Projective: {
        // basis (v, psi+ v, psi- v, psi+ psi- v)
        QMatrix n = QMatrix::diagonal(
            {label.n, label.n + Rational(1), label.n - Rational(1), label.n});
        QMatrix pp(4, 4), pm(4, 4);
        pp(1, 0) = 1;  // v -> psi+ v
        pp(3, 2) = 1;  // psi- v -> psi+ psi- v
        pm(2, 0) = 1;  // v -> psi- v
        pm(3, 1) = -1; // psi+ v -> psi- psi+ v = -psi+ psi- v
        std::array<QMatrix, 4> act;
        act[idx(B::N)] = n;
        act[idx(B::E)] = QMatrix(4, 4);
        act[idx(B::PsiPlus)] = pp;
        act[idx(B::PsiMinus)] = pm;
        return Gl11MatrixModule(
            {Parity::Even, Parity::Odd, Parity::Odd, Parity::Even},
            std::move(act));
    }
    }
    throw std::invalid_argument("unknown finite label kind");
}

Gl11MatrixModule tensor(const Gl11MatrixModule &a, const Gl11MatrixModule &b) {
    const std::size_t da = a.dimension(), db = b.dimension();
    std::vector<Parity> parity;
    parity.reserve(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            parity.push_back(a.parity()[i] + b.parity()[j]);

    std::vector<Rational> koszul(da);
    for (std::size_t i = 0; i < da; ++i)
        koszul[i] = a.parity()[i] == Parity::Odd ? -1 : 1;
    const QMatrix sign = QMatrix::diagonal(koszul);
    const QMatrix id_a = QMatrix::identity(da), id_b = QMatrix::identity(db);

    std::array<QMatrix, 4> act;
    for (auto x : kGl11Basis) {
        const bool odd = Gl11Algebra::parity(x) == Parity::Odd;
        act[idx(x)] = kron(a.action(x), id_b) +
                      kron(odd ? sign : id_a, b.action(x));
    }
    return Gl11MatrixModule(std::move(parity), std::move(act));
}

std::vector<Rational> rational_semisimple_spectrum(const QMatrix &m) {
    const std::size_t d = m.rows();
    if (d != m.cols())
        throw std::invalid_argument("spectrum of a non-square matrix");
    if (d == 0)
        return {};
    // A rational eigenvalue of m has denominator dividing the lcm of the
    // entry denominators, so float estimates can be snapped and then
    // verified exactly.
    mpz_class lcm = 1;
    Eigen::MatrixXd approx(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m(i, j).denominator().get_mpz_t());
            approx(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(i, j).to_double();
        }
    const double scale = lcm.get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(approx, false);
    std::set<Rational> candidates;
    for (const auto &ev : solver.eigenvalues()) {
        const double snapped = std::round(ev.real() * scale);
        candidates.insert(Rational(mpq_class(mpz_class(snapped), lcm)));
    }
    std::size_t total = 0;
    for (const auto &lambda : candidates)
        total += (m - lambda * QMatrix::identity(d)).nullspace().cols();
    if (total != d)
        throw std::domain_error(
            "action is not semisimple with rational eigenvalues");
    return {candidates.begin(), candidates.end()};
}

namespace {

struct WeightStats {
    std::size_t dim = 0;
    std::size_t rank_plus = 0;
    std::size_t rank_minus = 0;
    std::size_t rank_plus_minus = 0;
    friend bool operator==(const WeightStats &, const WeightStats &) = default;
};

using StatTable = std::map<Rational, WeightStats>;

// Predicted statistics of a candidate multiset within one E-eigenspace.
StatTable predicted_stats(const FinMultiset &candidate) {
    StatTable t;
    const Rational half(1, 2), one(1);
    for (const auto &[label, mult] : candidate) {
        const auto c = static_cast<std::size_t>(mult);
        switch (label.kind) {
        case FinLabel::Kind::Atypical:
            t[label.n].dim += c;
            break;
        case FinLabel::Kind::Verma: {
            const Rational top = label.n + half, bottom = label.n - half;
            t[top].dim += c;
            t[bottom].dim += c;
            t[top].rank_minus += c;
            if (!label.e.is_zero()) {
                t[bottom].rank_plus += c;
                t[top].rank_plus_minus += c;
            }
            break;
        }
        case FinLabel::Kind::Projective: {
            const Rational &m = label.n;
            t[m].dim += 2 * c;
            t[m + one].dim += c;
            t[m - one].dim += c;
            t[m].rank_plus += c;
            t[m - one].rank_plus += c;
            t[m].rank_minus += c;
            t[m + one].rank_minus += c;
            t[m].rank_plus_minus += c;
            break;
        }
        }
    }
    std::erase_if(t, [](const auto &kv) { return kv.second == WeightStats{}; });
    return t;
}

FinMultiset decompose_typical_block(const Rational &e, const StatTable &obs) {
    std::map<Rational, std::size_t> spectrum;
    for (const auto &[lambda, s] : obs)
        spectrum[lambda] = s.dim;
    FinMultiset out;
    const Rational half(1, 2), one(1);
    while (!spectrum.empty()) {
        auto top = std::prev(spectrum.end());
        const Rational lambda = top->first;
        const std::size_t c = top->second;
        auto below = spectrum.find(lambda - one);
        if (below == spectrum.end() || below->second < c)
            throw std::domain_error("E = " + e.str() +
                                    " block has no Verma decomposition");
        out[FinLabel::verma(lambda - half, e)] += static_cast<int>(c);
        spectrum.erase(top);
        below->second -= c;
        if (below->second == 0)
            spectrum.erase(below);
    }
    if (predicted_stats(out) != obs)
        throw std::domain_error("E = " + e.str() +
                                " block statistics match no candidate");
    return out;
}

FinMultiset decompose_atypical_block(const StatTable &obs) {
    const Rational half(1, 2), one(1);
    FinMultiset projectives;
    for (const auto &[lambda, s] : obs)
        if (s.rank_plus_minus > 0)
            projectives[FinLabel::projective(lambda)] =
                static_cast<int>(s.rank_plus_minus);

    std::map<Rational, long> remaining;
    for (const auto &[lambda, s] : obs)
        remaining[lambda] = static_cast<long>(s.dim);
    for (const auto &[label, s] : predicted_stats(projectives))
        remaining[label] -= static_cast<long>(s.dim);
    for (const auto &[lambda, r] : remaining)
        if (r < 0)
            throw std::domain_error("E = 0 block statistics are infeasible");

    // Verma(m, 0) candidates need both m + 1/2 and m - 1/2 in the spectrum.
    std::vector<std::pair<Rational, long>> slots;
    for (const auto &[lambda, r] : remaining) {
        auto it = remaining.find(lambda - one);
        if (r > 0 && it != remaining.end() && it->second > 0)
            slots.emplace_back(lambda - half, std::min(r, it->second));
    }
    long space = 1;
    for (const auto &s : slots) {
        space *= s.second + 1;
        if (space > 1'000'000)
            throw std::domain_error("E = 0 block too large to enumerate");
    }

    std::vector<FinMultiset> matches;
    std::vector<long> counts(slots.size(), 0);
    for (long iter = 0; iter < space; ++iter) {
        long code = iter;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            counts[i] = code % (slots[i].second + 1);
            code /= slots[i].second + 1;
        }
        FinMultiset candidate = projectives;
        std::map<Rational, long> left = remaining;
        bool feasible = true;
        for (std::size_t i = 0; i < slots.size() && feasible; ++i) {
            if (counts[i] == 0)
                continue;
            candidate[FinLabel::verma(slots[i].first, Rational(0))] =
                static_cast<int>(counts[i]);
            left[slots[i].first + half] -= counts[i];
            left[slots[i].first - half] -= counts[i];
        }
        for (const auto &[lambda, r] : left) {
            if (r < 0)
                feasible = false;
            else if (r > 0)
                candidate[FinLabel::atypical(lambda)] = static_cast<int>(r);
        }
        if (feasible && predicted_stats(candidate) == obs)
            matches.push_back(std::move(candidate));
    }
    if (matches.empty())
        throw std::domain_error("E = 0 block statistics match no candidate");
    if (matches.size() > 1)
        throw std::domain_error("E = 0 block statistics are ambiguous");
    return matches.front();
}

} // namespace

FinMultiset decompose(const Gl11MatrixModule &m) {
    const std::size_t d = m.dimension();
    const QMatrix &n = m.action(Gl11Basis::N);
    const QMatrix &e = m.action(Gl11Basis::E);
    const QMatrix &pp = m.action(Gl11Basis::PsiPlus);
    const QMatrix &pm = m.action(Gl11Basis::PsiMinus);
    const QMatrix ppm = pp * pm;
    const QMatrix id = QMatrix::identity(d);

    const auto e_spec = rational_semisimple_spectrum(e);
    const auto n_spec = rational_semisimple_spectrum(n);

    FinMultiset out;
    for (const auto &ev : e_spec) {
        StatTable obs;
        for (const auto &lambda : n_spec) {
            QMatrix w = (e - ev * id).stacked(n - lambda * id).nullspace();
            if (w.cols() == 0)
                continue;
            WeightStats s;
            s.dim = w.cols();
            s.rank_plus = (pp * w).rank();
            s.rank_minus = (pm * w).rank();
            s.rank_plus_minus = (ppm * w).rank();
            obs[lambda] = s;
        }
        FinMultiset block = ev.is_zero() ? decompose_atypical_block(obs)
                                         : decompose_typical_block(ev, obs);
        for (const auto &[label, c] : block)
            out[label] += c;
    }
    return out;
}

QMatrix l0_top_matrix(const Gl11MatrixModule &m, const Rational &k) {
    if (k.is_zero())
        throw std::invalid_argument("level k must be nonzero");
    const QMatrix &n = m.action(Gl11Basis::N);
    const QMatrix &e = m.action(Gl11Basis::E);
    rational_semisimple_spectrum(e);
    const QMatrix ppm =
        m.action(Gl11Basis::PsiPlus) * m.action(Gl11Basis::PsiMinus);
    const Rational inv_k = k.inverse();
    return inv_k * (n * e - ppm) + (inv_k / Rational(2)) * e +
           (inv_k * inv_k / Rational(2)) * (e * e);
}

std::string render(const FinMultiset &s) {
    std::string out;
    for (const auto &[label, c] : s) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c) + "*";
        out += label.str();
    }
    return out.empty() ? "0" : out;
}

} // namespace gl11
