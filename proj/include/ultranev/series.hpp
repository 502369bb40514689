// Copyright 2026 the ultranev authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULTRANEV_SERIES_HPP
#define ULTRANEV_SERIES_HPP

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace ultranev {

// Certified lower bound on tail coefficient valuations:
//   v(a_i) >= beta + sigma * i   for every i at or past the known order.
// The trivial envelope (0, 0) asserts integral tail coefficients.
struct tail_envelope {
    rat beta = rat(0);
    rat sigma = rat(0);
    bool operator==(const tail_envelope&) const = default;
};

// Power series known exactly up to (not including) `order`.  When tail_zero
// is set the series is an exact polynomial and every later coefficient is
// zero; otherwise the envelope is the only information about the tail.
// Invariant: c.size() == order.
template <valued_field F>
struct trunc_series {
    std::vector<typename F::elem> c;
    long order = 0;
    bool tail_zero = false;
    tail_envelope env{};
};

template <valued_field F>
trunc_series<F> series_make(const F& k, std::vector<typename F::elem> coeffs, long order,
                            bool tail_zero = false, tail_envelope env = {}) {
    if (order < 0) throw hypothesis_violated("series order must be nonnegative");
    trunc_series<F> s;
    s.order = order;
    s.tail_zero = tail_zero;
    s.env = env;
    coeffs.resize(order, k.zero());
    s.c = std::move(coeffs);
    return s;
}

template <valued_field F>
trunc_series<F> series_zero(const F&) {
    trunc_series<F> s;
    s.tail_zero = true;
    return s;
}

// An exact polynomial as a series.  If the requested order cuts the
// polynomial short the dropped coefficients are folded into the envelope.
template <valued_field F>
trunc_series<F> series_from_poly(const F& k, const poly<F>& p, long order) {
    trunc_series<F> s;
    long np = static_cast<long>(p.c.size());
    if (np <= order) {
        s.c = p.c;
        s.c.resize(order, k.zero());
        s.order = order;
        s.tail_zero = true;
        return s;
    }
    s.c.assign(p.c.begin(), p.c.begin() + order);
    s.order = order;
    s.tail_zero = false;
    std::optional<rat> beta;
    for (long i = order; i < np; ++i) {
        auto v = k.valuation(p.c[i]);
        if (v && (!beta || *v < *beta)) beta = *v;
    }
    if (!beta) {
        s.tail_zero = true;  // everything dropped was zero after all
    } else {
        s.env = {*beta, rat(0)};
    }
    return s;
}

template <valued_field F>
trunc_series<F> series_constant(const F& k, const typename F::elem& e, long order) {
    return series_from_poly(k, poly_constant(k, e), order);
}

template <valued_field F>
bool series_is_exact_zero(const F& k, const trunc_series<F>& s) {
    if (!s.tail_zero) return false;
    for (const auto& e : s.c)
        if (!k.is_zero(e)) return false;
    return true;
}

// First known nonzero exponent, if any.
template <valued_field F>
std::optional<long> series_known_ord(const F& k, const trunc_series<F>& s) {
    for (long i = 0; i < s.order; ++i)
        if (!k.is_zero(s.c[i])) return i;
    return std::nullopt;
}

template <valued_field F>
bool series_known_eq(const F& k, const trunc_series<F>& a, const trunc_series<F>& b) {
    long n = std::min(a.order, b.order);
    for (long i = 0; i < n; ++i)
        if (!k.eq(a.c[i], b.c[i])) return false;
    return true;
}

namespace detail {

// Lower the envelope floor so the bound also covers a known coefficient
// that is being handed over to the tail.
inline void env_absorb(tail_envelope& e, long i, const rat& v) {
    rat need = v - e.sigma * i;
    if (need < e.beta) e.beta = need;
}

constexpr long series_inf_order = std::numeric_limits<long>::max() / 4;

// Order index below which a coefficient is known to vanish: everything
// before the first known nonzero entry, or the whole known range.
template <valued_field F>
long vanish_ord(const F& k, const trunc_series<F>& s) {
    auto o = series_known_ord(k, s);
    return o ? *o : s.order;
}

}  // namespace detail

template <valued_field F>
trunc_series<F> series_neg(const F& k, const trunc_series<F>& s) {
    trunc_series<F> r = s;
    for (auto& e : r.c) e = k.neg(e);
    return r;
}

template <valued_field F>
trunc_series<F> series_add(const F& k, const trunc_series<F>& a, const trunc_series<F>& b) {
    trunc_series<F> r;
    if (a.tail_zero && b.tail_zero) {
        r.order = std::max(a.order, b.order);
        r.tail_zero = true;
        r.c.assign(r.order, k.zero());
        for (long i = 0; i < a.order; ++i) r.c[i] = a.c[i];
        for (long i = 0; i < b.order; ++i) r.c[i] = k.add(r.c[i], b.c[i]);
        return r;
    }
    r.tail_zero = false;
    std::optional<rat> beta, sigma;
    std::optional<long> order;
    for (const auto* s : {&a, &b}) {
        if (s->tail_zero) continue;
        if (!sigma || s->env.sigma < *sigma) sigma = s->env.sigma;
        if (!beta || s->env.beta < *beta) beta = s->env.beta;
        if (!order || s->order < *order) order = s->order;
    }
    r.order = *order;
    r.env = {*beta, *sigma};
    for (const auto* s : {&a, &b})
        for (long i = r.order; i < s->order; ++i)
            if (auto v = k.valuation(s->c[i])) detail::env_absorb(r.env, i, *v);
    r.c.assign(r.order, k.zero());
    for (long i = 0; i < r.order; ++i) {
        auto x = i < a.order ? a.c[i] : k.zero();
        auto y = i < b.order ? b.c[i] : k.zero();
        r.c[i] = k.add(x, y);
    }
    return r;
}

template <valued_field F>
trunc_series<F> series_sub(const F& k, const trunc_series<F>& a, const trunc_series<F>& b) {
    return series_add(k, a, series_neg(k, b));
}

template <valued_field F>
trunc_series<F> series_scale(const F& k, const trunc_series<F>& s,
                             const typename F::elem& e) {
    if (k.is_zero(e)) return series_zero(k);
    trunc_series<F> r = s;
    for (auto& x : r.c) x = k.mul(x, e);
    if (!r.tail_zero) r.env.beta += *k.valuation(e);
    return r;
}

template <valued_field F>
trunc_series<F> series_mul(const F& k, const trunc_series<F>& a, const trunc_series<F>& b) {
    if (series_is_exact_zero(k, a) || series_is_exact_zero(k, b)) return series_zero(k);
    trunc_series<F> r;
    if (a.tail_zero && b.tail_zero) {
        r.order = a.order + b.order > 0 ? a.order + b.order - 1 : 0;
        if (a.order == 0 || b.order == 0) return series_zero(k);
        r.tail_zero = true;
        r.c.assign(r.order, k.zero());
        for (long i = 0; i < a.order; ++i) {
            if (k.is_zero(a.c[i])) continue;
            for (long j = 0; j < b.order; ++j)
                r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
        }
        return r;
    }

    long ord_a = detail::vanish_ord(k, a);
    long ord_b = detail::vanish_ord(k, b);
    long bound_a = a.tail_zero ? detail::series_inf_order : a.order + ord_b;
    long bound_b = b.tail_zero ? detail::series_inf_order : b.order + ord_a;
    r.order = std::min(bound_a, bound_b);
    r.tail_zero = false;

    rat sigma_r;
    {
        std::optional<rat> s;
        if (!a.tail_zero) s = a.env.sigma;
        if (!b.tail_zero && (!s || b.env.sigma < *s)) s = b.env.sigma;
        sigma_r = *s;
    }
    // K_x = inf over all exponents of (valuation floor at i) - sigma_r * i;
    // the tail contributes beta + order*(sigma - sigma_r) since sigma >= sigma_r.
    auto kfloor = [&](const trunc_series<F>& s) {
        std::optional<rat> kx;
        for (long i = 0; i < s.order; ++i) {
            auto v = k.valuation(s.c[i]);
            if (!v) continue;
            rat cand = *v - sigma_r * i;
            if (!kx || cand < *kx) kx = cand;
        }
        if (!s.tail_zero) {
            rat cand = s.env.beta + (s.env.sigma - sigma_r) * s.order;
            if (!kx || cand < *kx) kx = cand;
        }
        return *kx;  // nonempty: exact-zero inputs were handled above
    };
    r.env = {kfloor(a) + kfloor(b), sigma_r};

    r.c.assign(r.order, k.zero());
    for (long n = 0; n < r.order; ++n) {
        for (long i = 0; i <= n; ++i) {
            long j = n - i;
            bool a_known = i < a.order || a.tail_zero;
            bool b_known = j < b.order || b.tail_zero;
            // By the order bound an unknown factor is always paired with a
            // known zero, so the term contributes nothing.
            if (!a_known || !b_known) continue;
            auto ai = i < a.order ? a.c[i] : k.zero();
            auto bj = j < b.order ? b.c[j] : k.zero();
            if (k.is_zero(ai) || k.is_zero(bj)) continue;
            r.c[n] = k.add(r.c[n], k.mul(ai, bj));
        }
    }
    return r;
}

// Formal reciprocal; the constant term must be a nonzero unit of the series
// ring.  The envelope floor mu is the worst slope (v(a_i) - v(a_0))/i over
// known and tail coefficients, giving v(b_n) >= -v(a_0) + mu*n by induction.
template <valued_field F>
trunc_series<F> series_reciprocal(const F& k, const trunc_series<F>& s) {
    if (s.order == 0 || k.is_zero(s.c[0]))
        throw non_unit_reciprocal("constant term vanishes or is unknown");
    trunc_series<F> r;
    r.order = s.order;
    r.c.assign(r.order, k.zero());
    auto inv0 = k.inv(s.c[0]);
    r.c[0] = inv0;
    for (long n = 1; n < r.order; ++n) {
        auto acc = k.zero();
        for (long i = 1; i <= n; ++i) acc = k.add(acc, k.mul(s.c[i], r.c[n - i]));
        r.c[n] = k.neg(k.mul(inv0, acc));
    }

    bool constant = s.tail_zero;
    for (long i = 1; i < s.order && constant; ++i)
        if (!k.is_zero(s.c[i])) constant = false;
    if (constant) {
        r.tail_zero = true;
        return r;
    }
    r.tail_zero = false;
    rat v0 = *k.valuation(s.c[0]);
    std::optional<rat> mu;
    for (long i = 1; i < s.order; ++i) {
        auto v = k.valuation(s.c[i]);
        if (!v) continue;
        rat cand = (*v - v0) / i;
        if (!mu || cand < *mu) mu = cand;
    }
    if (!s.tail_zero) {
        rat cand = s.env.beta - v0 >= 0
                       ? s.env.sigma
                       : (s.env.beta + s.env.sigma * s.order - v0) / s.order;
        if (!mu || cand < *mu) mu = cand;
    }
    r.env = {-v0, *mu};
    return r;
}

template <valued_field F>
trunc_series<F> series_div(const F& k, const trunc_series<F>& a, const trunc_series<F>& b) {
    return series_mul(k, a, series_reciprocal(k, b));
}

// Divide by x^m; the first m coefficients must be known zeros.
template <valued_field F>
trunc_series<F> series_shift_down(const F& k, const trunc_series<F>& s, long m) {
    if (m == 0) return s;
    if (m < 0) throw hypothesis_violated("negative shift");
    for (long i = 0; i < std::min(m, s.order); ++i)
        if (!k.is_zero(s.c[i]))
            throw hypothesis_violated("shift past a nonzero coefficient");
    if (s.order < m) {
        if (s.tail_zero) return series_zero(k);
        throw all_zero_up_to_order("cannot certify divisibility by x^" +
                                   std::to_string(m));
    }
    trunc_series<F> r;
    r.order = s.order - m;
    r.c.assign(s.c.begin() + m, s.c.end());
    r.tail_zero = s.tail_zero;
    if (!r.tail_zero) r.env = {s.env.beta + s.env.sigma * m, s.env.sigma};
    return r;
}

// Multiply by x^m.  The envelope transfers with the same slope and the
// floor raised accordingly.
template <valued_field F>
trunc_series<F> series_shift_up(const F& k, const trunc_series<F>& s, long m) {
    if (m == 0) return s;
    if (m < 0) throw hypothesis_violated("negative shift");
    trunc_series<F> r;
    r.order = s.order + m;
    r.c.assign(r.order, k.zero());
    for (long i = 0; i < s.order; ++i) r.c[i + m] = s.c[i];
    r.tail_zero = s.tail_zero;
    if (!r.tail_zero) r.env = {s.env.beta - s.env.sigma * m, s.env.sigma};
    return r;
}

// P(s) by Horner.
template <valued_field F>
trunc_series<F> series_compose_poly(const F& k, const poly<F>& p, const trunc_series<F>& s) {
    trunc_series<F> r = series_zero(k);
    for (std::size_t i = p.c.size(); i-- > 0;) {
        r = series_mul(k, r, s);
        r = series_add(k, r, series_constant(k, p.c[i], std::max<long>(s.order, 1)));
    }
    return r;
}

// Exact chi-th root of a series that is a chi-th power: exponents divide by
// chi, coefficients take chi-th roots (the Frobenius is injective, so when
// the root exists it is this one).  The envelope divides its floor by chi
// and keeps its slope, matching v(b_j) = v(a_{j*chi}) / chi.
template <valued_field F>
trunc_series<F> series_chi_root(const F& k, const trunc_series<F>& s) {
    unsigned chi = k.chi();
    if (chi == 1) return s;
    trunc_series<F> r;
    r.order = s.order == 0 ? 0 : (s.order - 1) / static_cast<long>(chi) + 1;
    r.c.assign(r.order, k.zero());
    for (long i = 0; i < s.order; ++i) {
        if (k.is_zero(s.c[i])) continue;
        if (i % static_cast<long>(chi) != 0)
            throw not_a_chi_power(i, "exponent is not a multiple of chi");
        auto root = k.chi_root(s.c[i]);
        if (!root) throw not_a_chi_power(i, "coefficient has no chi-th root");
        r.c[i / static_cast<long>(chi)] = std::move(*root);
    }
    r.tail_zero = s.tail_zero;
    if (!r.tail_zero) r.env = {s.env.beta / static_cast<long>(chi), s.env.sigma};
    return r;
}

}  // namespace ultranev

#endif  // ULTRANEV_SERIES_HPP
