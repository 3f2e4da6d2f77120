#include "gl11/characters.hpp"

#include "gl11/labels.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

namespace gl11 {

namespace {

int depth_for(const Rational &q_cutoff) {
    if (q_cutoff.sign() < 0)
        throw std::invalid_argument("q cutoff must be nonnegative");
    return static_cast<int>(q_cutoff.floor().to_int64());
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

using Grid = std::vector<std::vector<std::int64_t>>;

// Multiply the dense (q, z) grid by (1 + z^dz q^dq) in place.
void times_binomial(ProductSlices &p, int dz, int dq) {
    const int d = p.depth();
    ProductSlices old = p;
    for (int j = dq; j <= d; ++j)
        for (int r = ProductSlices::min_z(j); r <= ProductSlices::max_z(j); ++r) {
            const int sr = r - dz;
            const int sj = j - dq;
            if (sr < ProductSlices::min_z(sj) || sr > ProductSlices::max_z(sj))
                continue;
            p.at(j, r) = checked_add(p.at(j, r), old.at(sj, sr));
        }
}

// Multiply by 1 / (1 - q^dq) in place.
void times_geometric(ProductSlices &p, int dq) {
    const int d = p.depth();
    for (int j = dq; j <= d; ++j)
        for (int r = ProductSlices::min_z(j - dq); r <= ProductSlices::max_z(j - dq); ++r)
            p.at(j, r) = checked_add(p.at(j, r), p.at(j - dq, r));
}

} // namespace

ProductSlices::ProductSlices(int depth) : depth_(depth) {
    if (depth < 0)
        throw std::invalid_argument("negative product depth");
    data_.assign(static_cast<std::size_t>((depth + 1) * width()), 0);
}

ProductSlices verma_product_slices_serial(int depth) {
    ProductSlices p(depth);
    p.at(0, 0) = 1;
    for (int i = 0; i <= depth; ++i) {
        times_binomial(p, -1, i);
        if (i + 1 <= depth) {
            times_binomial(p, 1, i + 1);
            times_geometric(p, i + 1);
            times_geometric(p, i + 1);
        }
    }
    return p;
}

ProductSlices verma_product_slices(int depth) {
    ProductSlices out(depth);
    const int d = depth;
    const auto sz = static_cast<std::size_t>(d + 1);

    // Partition numbers, then bipartition counts B_j = sum_a p(a) p(j - a).
    std::vector<__int128> partitions(sz, 0);
    partitions[0] = 1;
    for (int part = 1; part <= d; ++part)
        for (int m = part; m <= d; ++m)
            partitions[static_cast<std::size_t>(m)] +=
                partitions[static_cast<std::size_t>(m - part)];
    std::vector<__int128> bipart(sz, 0);
#pragma omp parallel for schedule(static)
    for (int j = 0; j <= d; ++j) {
        __int128 s = 0;
        for (int a = 0; a <= j; ++a)
            s += partitions[static_cast<std::size_t>(a)] *
                 partitions[static_cast<std::size_t>(j - a)];
        bipart[static_cast<std::size_t>(j)] = s;
    }

    // distinct[k][m]: partitions of m into k distinct positive parts.
    int kmax = 0;
    while ((kmax + 1) * (kmax + 2) / 2 <= d)
        ++kmax;
    Grid distinct(static_cast<std::size_t>(kmax + 2), std::vector<std::int64_t>(sz, 0));
    distinct[0][0] = 1;
    for (int k = 1; k <= kmax + 1; ++k)
        for (int m = k; m <= d; ++m)
            distinct[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] =
                distinct[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - k)] +
                distinct[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - k)];
    // Parts drawn from {0, 1, 2, ...}: zero may or may not be used.
    auto with_zero = [&](int k, int m) -> std::int64_t {
        const auto mm = static_cast<std::size_t>(m);
        std::int64_t c = k <= kmax + 1 ? distinct[static_cast<std::size_t>(k)][mm] : 0;
        if (k >= 1 && k - 1 <= kmax + 1)
            c += distinct[static_cast<std::size_t>(k - 1)][mm];
        return c;
    };

    // Fermionic slices F_j(r): choose S+ in {1,2,..}, S- in {0,1,..};
    // r = |S+| - |S-|, j = sum S+ + sum S-.
    ProductSlices fermionic(d);
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= d; ++j) {
        for (int a = 0; a <= j; ++a) {
            const int b = j - a;
            for (int sp = 0; sp <= kmax; ++sp) {
                const std::int64_t cp =
                    distinct[static_cast<std::size_t>(sp)][static_cast<std::size_t>(a)];
                if (cp == 0)
                    continue;
                for (int sm = 0; sm <= kmax + 1; ++sm) {
                    const std::int64_t cm = with_zero(sm, b);
                    if (cm == 0)
                        continue;
                    const int r = sp - sm;
                    if (r < ProductSlices::min_z(j) || r > ProductSlices::max_z(j))
                        continue;
                    const __int128 v = static_cast<__int128>(fermionic.at(j, r)) +
                                       static_cast<__int128>(cp) * cm;
                    if (!fits(v))
                        overflow = true;
                    else
                        fermionic.at(j, r) = static_cast<std::int64_t>(v);
                }
            }
        }
    }

#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= d; ++j) {
        for (int r = ProductSlices::min_z(j); r <= ProductSlices::max_z(j); ++r) {
            __int128 s = 0;
            for (int a = 0; a <= j; ++a) {
                const int f = j - a;
                if (r < ProductSlices::min_z(f) || r > ProductSlices::max_z(f))
                    continue;
                s += bipart[static_cast<std::size_t>(a)] * fermionic.at(f, r);
            }
            if (!fits(s))
                overflow = true;
            else
                out.at(j, r) = static_cast<std::int64_t>(s);
        }
    }
    if (overflow)
        throw std::overflow_error("character coefficient exceeds 64 bits");
    return out;
}

JacobiSeries char_verma(const Rational &n, const Rational &ehat,
                        const Rational &q_cutoff) {
    const int depth = depth_for(q_cutoff);
    const ProductSlices p = verma_product_slices(depth);
    const Rational d = delta_formula(n, ehat);
    JacobiSeries::Terms terms;
    for (int j = 0; j <= depth; ++j)
        for (int r = ProductSlices::min_z(j); r <= ProductSlices::max_z(j); ++r)
            if (const auto c = p.at(j, r))
                terms.emplace(JacobiExponent{d + Rational(j), n + Rational(r), ehat}, c);
    return JacobiSeries(std::move(terms), d + q_cutoff);
}

JacobiSeries char_atypical0(const Rational &n, const Rational &q_cutoff,
                            const Rational &z_lo, const Rational &z_hi) {
    if (z_lo > z_hi)
        throw std::invalid_argument("empty z window [" + z_lo.str() + ", " +
                                    z_hi.str() + "]");
    const int depth = depth_for(q_cutoff);
    const ProductSlices p = verma_product_slices(depth);
    const Rational half(1, 2);
    // The m-th Verma reaches down to z = n - 1/2 - m - depth - 1 but no higher
    // than n - 1/2 - m + depth, so larger m cannot touch the window.
    const Rational reach = n - half + Rational(depth) - z_lo;
    const std::int64_t m_max = reach.sign() < 0 ? -1 : reach.floor().to_int64();

    JacobiSeries::Terms terms;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const Rational top = n - half - Rational(static_cast<long>(m));
        const std::int64_t sign = (m % 2 == 0) ? 1 : -1;
        for (int j = 0; j <= depth; ++j)
            for (int r = ProductSlices::min_z(j); r <= ProductSlices::max_z(j); ++r) {
                const auto c = p.at(j, r);
                if (c == 0)
                    continue;
                const Rational z = top + Rational(r);
                if (z < z_lo || z > z_hi)
                    continue;
                auto &slot = terms[JacobiExponent{Rational(j), z, Rational(0)}];
                slot = checked_add(slot, sign * c);
            }
    }
    return JacobiSeries(std::move(terms), q_cutoff);
}

InducedCharacter char_induced_typical(const Rational &n, const Rational &ehat,
                                      int m_range, const Rational &q_cutoff) {
    if (m_range < 1)
        throw std::invalid_argument("m_range must be at least 1");
    if (q_cutoff.sign() < 0)
        throw std::invalid_argument("q cutoff must be nonnegative");
    const Rational top = delta_formula(n, ehat) + q_cutoff;
    const Rational slope = Rational(2) * n + ehat;

    JacobiSeries lhs({}, top);
    JacobiSeries::Terms shifts;
    for (int m = -m_range; m <= m_range; ++m) {
        const Rational mm(m);
        const Rational nm = n + mm, em = ehat - Rational(2) * mm;
        const Rational room = top - delta_formula(nm, em);
        if (room.sign() >= 0)
            lhs = lhs + char_verma(nm, em, room);
        shifts.emplace(JacobiExponent{-mm * slope, mm, Rational(-2) * mm}, 1);
    }
    const Rational extra = Rational(m_range) * slope.abs();
    JacobiSeries base = char_verma(n, ehat, q_cutoff + extra);
    JacobiSeries rhs =
        jacobi_mul(base, JacobiSeries(std::move(shifts), std::nullopt)).truncated(top);
    return {lhs.truncated(top), rhs, top};
}

} // namespace gl11
