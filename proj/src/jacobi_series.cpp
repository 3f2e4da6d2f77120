#include "gl11/jacobi_series.hpp"

#include <stdexcept>

namespace gl11 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow");
    return r;
}

namespace {

std::optional<Rational> min_limit(const std::optional<Rational> &a,
                                  const std::optional<Rational> &b) {
    if (!a)
        return b;
    if (!b)
        return a;
    return min(*a, *b);
}

void accumulate(JacobiSeries::Terms &terms, const JacobiExponent &e,
                std::int64_t c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms.erase(it);
    }
}

} // namespace

JacobiSeries::JacobiSeries(Terms terms, std::optional<Rational> q_limit)
    : q_limit_(std::move(q_limit)) {
    for (auto &[e, c] : terms) {
        if (c == 0 || (q_limit_ && e.q > *q_limit_))
            continue;
        terms_.emplace(e, c);
    }
}

JacobiSeries JacobiSeries::monomial(const JacobiExponent &e, std::int64_t c) {
    return JacobiSeries(Terms{{e, c}}, std::nullopt);
}

std::optional<Rational> JacobiSeries::min_q() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.q;
}

std::optional<Rational> JacobiSeries::q_cutoff() const {
    auto lo = min_q();
    if (!lo || !q_limit_)
        return std::nullopt;
    return *q_limit_ - *lo;
}

std::int64_t JacobiSeries::coefficient(const JacobiExponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

JacobiSeries JacobiSeries::truncated(const Rational &q_limit) const {
    return JacobiSeries(terms_, min_limit(q_limit_, q_limit));
}

JacobiSeries JacobiSeries::z_restricted(const Rational &lo,
                                        const Rational &hi) const {
    Terms kept;
    for (const auto &[e, c] : terms_)
        if (e.z >= lo && e.z <= hi)
            kept.emplace(e, c);
    return JacobiSeries(std::move(kept), q_limit_);
}

JacobiSeries JacobiSeries::scaled(std::int64_t factor) const {
    Terms out;
    for (const auto &[e, c] : terms_)
        out.emplace(e, checked_mul(c, factor));
    return JacobiSeries(std::move(out), q_limit_);
}

JacobiSeries operator+(const JacobiSeries &a, const JacobiSeries &b) {
    auto limit = min_limit(a.q_limit_, b.q_limit_);
    JacobiSeries::Terms t = a.terms_;
    for (const auto &[e, c] : b.terms_)
        accumulate(t, e, c);
    return JacobiSeries(std::move(t), limit);
}

JacobiSeries operator-(const JacobiSeries &a, const JacobiSeries &b) {
    return a + b.scaled(-1);
}

JacobiSeries jacobi_mul(const JacobiSeries &a, const JacobiSeries &b) {
    if (a.empty() || b.empty())
        return JacobiSeries({}, min_limit(a.q_limit(), b.q_limit()));
    const Rational amin = *a.min_q(), bmin = *b.min_q();
    std::optional<Rational> limit;
    if (a.q_limit())
        limit = *a.q_limit() + bmin;
    if (b.q_limit())
        limit = min_limit(limit, *b.q_limit() + amin);
    JacobiSeries::Terms out;
    for (const auto &[ea, ca] : a.terms()) {
        if (limit && ea.q + bmin > *limit)
            break;
        for (const auto &[eb, cb] : b.terms()) {
            Rational q = ea.q + eb.q;
            if (limit && q > *limit)
                break;
            accumulate(out, {q, ea.z + eb.z, ea.y + eb.y}, checked_mul(ca, cb));
        }
    }
    return JacobiSeries(std::move(out), limit);
}

bool jacobi_equal_to_cutoff(const JacobiSeries &a, const JacobiSeries &b,
                            const Rational &window) {
    if (window.sign() < 0)
        throw std::invalid_argument("negative comparison window");
    if (a.empty() && b.empty())
        return true;
    Rational lo = a.empty() ? *b.min_q()
                            : (b.empty() ? *a.min_q() : min(*a.min_q(), *b.min_q()));
    Rational top = lo + window;
    for (const auto *s : {&a, &b})
        if (s->q_limit() && *s->q_limit() < top)
            throw std::invalid_argument(
                "comparison window " + window.str() +
                " exceeds the exact range of a series (limit " +
                s->q_limit()->str() + ")");
    return a.truncated(top).terms() == b.truncated(top).terms();
}

} // namespace gl11
