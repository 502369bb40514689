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

#ifndef ULTRANEV_MERO_HPP
#define ULTRANEV_MERO_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "newton.hpp"
#include "ratmap.hpp"
#include "roots.hpp"
#include "series.hpp"

namespace ultranev {

// Meromorphic representative f = x^x_power * num/den with num and den unit
// series (known nonzero constant terms).  The zero function is the single
// canonical value {0, 1, 0}.
template <valued_field F>
struct mero {
    trunc_series<F> num;
    trunc_series<F> den;
    long x_power = 0;
};

template <valued_field F>
bool mero_is_zero(const F& k, const mero<F>& m) {
    return series_is_exact_zero(k, m.num);
}

// Normalizes by pulling powers of x out of both parts.  A numerator that is
// zero as far as it is known, without being exactly zero, cannot be
// normalized and is refused.
template <valued_field F>
mero<F> mero_make(const F& k, trunc_series<F> num, trunc_series<F> den, long x_power = 0) {
    if (series_is_exact_zero(k, den)) throw zero_denominator("meromorphic denominator");
    if (series_is_exact_zero(k, num)) {
        mero<F> z;
        z.num = series_zero(k);
        z.den = series_constant(k, k.one(), 1);
        return z;
    }
    auto on = series_known_ord(k, num);
    auto od = series_known_ord(k, den);
    if (!on) throw all_zero_up_to_order("numerator vanishes to its whole known order");
    if (!od) throw all_zero_up_to_order("denominator vanishes to its whole known order");
    mero<F> m;
    m.num = series_shift_down(k, std::move(num), *on);
    m.den = series_shift_down(k, std::move(den), *od);
    m.x_power = x_power + *on - *od;
    return m;
}

template <valued_field F>
mero<F> mero_from_series(const F& k, trunc_series<F> s) {
    long order = std::max<long>(s.order, 1);
    return mero_make(k, std::move(s), series_constant(k, k.one(), order));
}

template <valued_field F>
mero<F> mero_from_const(const F& k, const typename F::elem& e, long order) {
    return mero_make(k, series_constant(k, e, order), series_constant(k, k.one(), order));
}

template <valued_field F>
mero<F> mero_from_ratmap(const F& k, const ratmap<F>& rm, long order) {
    return mero_make(k, series_from_poly(k, rm.num, order),
                     series_from_poly(k, rm.den, order));
}

template <valued_field F>
mero<F> mero_reciprocal(const F& k, const mero<F>& m) {
    if (mero_is_zero(k, m)) throw zero_denominator("reciprocal of the zero function");
    mero<F> r;
    r.num = m.den;
    r.den = m.num;
    r.x_power = -m.x_power;
    return r;
}

template <valued_field F>
mero<F> mero_mul(const F& k, const mero<F>& a, const mero<F>& b) {
    if (mero_is_zero(k, a) || mero_is_zero(k, b)) return mero_make(k, series_zero(k), a.den);
    return mero_make(k, series_mul(k, a.num, b.num), series_mul(k, a.den, b.den),
                     a.x_power + b.x_power);
}

template <valued_field F>
mero<F> mero_div(const F& k, const mero<F>& a, const mero<F>& b) {
    return mero_mul(k, a, mero_reciprocal(k, b));
}

template <valued_field F>
mero<F> mero_neg(const F& k, const mero<F>& a) {
    mero<F> r = a;
    r.num = series_neg(k, r.num);
    return r;
}

template <valued_field F>
mero<F> mero_add(const F& k, const mero<F>& a, const mero<F>& b) {
    if (mero_is_zero(k, a)) return b;
    if (mero_is_zero(k, b)) return a;
    long e = std::min(a.x_power, b.x_power);
    auto left = series_shift_up(k, series_mul(k, a.num, b.den), a.x_power - e);
    auto right = series_shift_up(k, series_mul(k, b.num, a.den), b.x_power - e);
    return mero_make(k, series_add(k, left, right), series_mul(k, a.den, b.den), e);
}

template <valued_field F>
mero<F> mero_sub(const F& k, const mero<F>& a, const mero<F>& b) {
    return mero_add(k, a, mero_neg(k, b));
}

template <valued_field F>
mero<F> mero_sub_const(const F& k, const mero<F>& a, const typename F::elem& c) {
    if (k.is_zero(c)) return a;
    long order = std::max<long>(std::max(a.num.order, a.den.order), 1);
    return mero_sub(k, a, mero_from_const(k, c, order));
}

namespace detail {

inline certified_bound combine_bounds(const certified_bound& a, const certified_bound& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    if (a.value < b.value) return a;
    if (b.value < a.value) return b;
    return {false, a.value, a.inclusive && b.inclusive};
}

}  // namespace detail

template <valued_field F>
certified_bound mero_certified_bound(const F& k, const mero<F>& m) {
    if (mero_is_zero(k, m)) throw zero_polynomial("certification of the zero function");
    return detail::combine_bounds(series_certified_bound(k, m.num),
                                  series_certified_bound(k, m.den));
}

// ---------------------------------------------------------------------------
// Divisor of zeros and poles by log-radius.
// ---------------------------------------------------------------------------

// One radius class of zeros (mult > 0) or poles (mult < 0).  distinct is the
// number of distinct points when certified and 0 when unknown (counts read
// off a truncated valuation polygon carry no separability information).
struct divisor_entry {
    rat u;
    long mult;
    long distinct;
};

struct divisor {
    std::vector<divisor_entry> entries;  // sorted by u; zeros and poles separate
    long origin = 0;                     // order at x = 0: > 0 zero, < 0 pole
    certified_bound bound;
};

namespace detail {

// Entries of one unit series, with the given sign.  Exact polynomials go
// through squarefree factorization so distinct-point counts per radius are
// certified; factorization failures in positive characteristic (tails of
// chi-th powers outside the field) and genuine truncations fall back to the
// valuation polygon with distinct counts unknown.
template <valued_field F>
void divisor_side(const F& k, const trunc_series<F>& s, int sign, const certified_bound& b,
                  std::vector<divisor_entry>& out) {
    auto add_entry = [&](const rat& u, long mult, long distinct) {
        if (!b.infinite) {
            if (u > b.value) return;
            if (u == b.value && !b.inclusive) return;
        }
        for (auto& e : out) {
            if (e.u == u && (e.mult > 0) == (sign > 0)) {
                e.mult += sign * mult;
                e.distinct = e.distinct > 0 && distinct > 0 ? e.distinct + distinct : 0;
                return;
            }
        }
        out.push_back({u, sign * mult, distinct});
    };

    if (s.tail_zero) {
        poly<F> p = poly_from_coeffs(k, s.c);
        if (detail::ideg(p) == 0) return;
        bool factored = false;
        try {
            for (const auto& sf : squarefree_factorization(k, p)) {
                std::vector<hull_point> pts;
                for (std::size_t i = 0; i < sf.factor.c.size(); ++i)
                    if (auto v = k.valuation(sf.factor.c[i]))
                        pts.push_back({static_cast<long>(i), *v});
                for (const auto& seg : hull_slopes(lower_hull(pts)))
                    add_entry(seg.slope, sf.multiplicity * seg.length, seg.length);
            }
            factored = true;
        } catch (const not_a_chi_power&) {
        }
        if (factored) return;
    }
    auto np = newton_polygon(k, s);
    for (const auto& seg : np.slopes) add_entry(seg.slope, seg.length, 0);
}

}  // namespace detail

template <valued_field F>
divisor mero_divisor(const F& k, const mero<F>& m) {
    if (mero_is_zero(k, m)) throw zero_polynomial("divisor of the zero function");
    divisor d;
    d.origin = m.x_power;
    d.bound = mero_certified_bound(k, m);
    detail::divisor_side(k, m.num, +1, d.bound, d.entries);
    detail::divisor_side(k, m.den, -1, d.bound, d.entries);
    std::sort(d.entries.begin(), d.entries.end(),
              [](const divisor_entry& a, const divisor_entry& b) {
                  if (a.u != b.u) return a.u < b.u;
                  return a.mult > b.mult;
              });
    return d;
}

// ---------------------------------------------------------------------------
// Ramification reduction: peel maximal chi-th powers.
// ---------------------------------------------------------------------------

template <valued_field F>
struct ram_result {
    long t = 0;        // f equals reduced^(chi^t)
    mero<F> reduced;
    // True when the input was exact, so the chi-th power statement covers
    // the whole function and not just the known coefficients.
    bool order_certified = true;
};

template <valued_field F>
ram_result<F> ramification_index(const F& k, const mero<F>& m) {
    ram_result<F> r{0, m, true};
    if (k.chi() == 1) return r;
    long chi = static_cast<long>(k.chi());
    while (true) {
        if (r.reduced.x_power % chi != 0) break;
        trunc_series<F> n, d;
        try {
            n = series_chi_root(k, r.reduced.num);
            d = series_chi_root(k, r.reduced.den);
        } catch (const not_a_chi_power&) {
            break;
        }
        r.reduced.num = std::move(n);
        r.reduced.den = std::move(d);
        r.reduced.x_power /= chi;
        ++r.t;
    }
    r.order_certified = (m.num.tail_zero && m.den.tail_zero) || r.t == 0;
    return r;
}

// ---------------------------------------------------------------------------
// Composition P(f) of a rational map with a meromorphic representative.
// ---------------------------------------------------------------------------

namespace detail {

// U(f) for f = x^e A/B written as x^pow * series / B^deg(U).  The series is
// sum_i u_i A^i B^(n-i) with the x exponents cleared of negative powers:
// pow = e*n when e < 0 and 0 otherwise.
template <valued_field F>
std::pair<trunc_series<F>, long> poly_along(const F& k, const poly<F>& u,
                                            const std::vector<trunc_series<F>>& pow_a,
                                            const std::vector<trunc_series<F>>& pow_b,
                                            long e) {
    trunc_series<F> acc = series_zero(k);
    long n = ideg(u);
    if (n < 0) return {acc, 0};
    for (long i = 0; i <= n; ++i) {
        if (k.is_zero(u.c[i])) continue;
        auto term = series_scale(k, series_mul(k, pow_a[i], pow_b[n - i]), u.c[i]);
        long shift = e >= 0 ? e * i : -e * (n - i);
        acc = series_add(k, acc, series_shift_up(k, term, shift));
    }
    return {acc, e < 0 ? e * n : 0};
}

}  // namespace detail

// P(f) for a reduced rational map P = U/V.  Writing f = x^e A/B, both U(f)
// and V(f) carry the denominator B^deg, and the shared power cancels:
//   P(f) = x^(pu-pv) * num_U * B^(deg V - deg U) / num_V.
// For a reduced f this representative is again reduced.  Degenerate when the
// denominator of P vanishes identically along f (the image sits inside the
// pole locus), which covers constant f at a pole and the 0/0 collapse.
template <valued_field F>
mero<F> compose_ratmap(const F& k, const ratmap<F>& p, const mero<F>& f) {
    long n = detail::ideg(p.num);
    long m = detail::ideg(p.den);
    long top = std::max({n, m, 0L});
    std::vector<trunc_series<F>> pow_a{series_constant(k, k.one(), std::max<long>(f.num.order, 1))};
    std::vector<trunc_series<F>> pow_b{pow_a[0]};
    for (long i = 1; i <= top; ++i) {
        pow_a.push_back(series_mul(k, pow_a.back(), f.num));
        pow_b.push_back(series_mul(k, pow_b.back(), f.den));
    }
    auto [nu, pu] = detail::poly_along(k, p.num, pow_a, pow_b, f.x_power);
    auto [nv, pv] = detail::poly_along(k, p.den, pow_a, pow_b, f.x_power);
    if (series_is_exact_zero(k, nv))
        throw degenerate_composition("denominator of the map vanishes along the function");
    if (m > n) nu = series_mul(k, nu, pow_b[m - n]);
    if (n > m) nv = series_mul(k, nv, pow_b[n - m]);
    return mero_make(k, std::move(nu), std::move(nv), pu - pv);
}

}  // namespace ultranev

#endif  // ULTRANEV_MERO_HPP
