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

#ifndef ULTRANEV_NEWTON_HPP
#define ULTRANEV_NEWTON_HPP

#include <optional>
#include <vector>

#include "convex.hpp"
#include "series.hpp"

namespace ultranev {

// Largest log-radius t at which zero counts are certified from the known
// coefficients.  An exact polynomial is certified everywhere.  Otherwise
// closed-disk queries are valid for t < value, plus t == value when the
// bound is inclusive; open-disk queries additionally allow the endpoint of
// an exclusive bound.
struct certified_bound {
    bool infinite = false;
    rat value = rat(0);
    bool inclusive = false;
};

// Valuation polygon of the known coefficients, in log-radius coordinates:
// a hull segment of slope u and horizontal length l records l zeros with
// log-radius u (valuation -u).  The origin contributes origin_order zeros
// to every disk.
struct newton_polygon_t {
    std::vector<hull_point> vertices;  // (exponent, coefficient valuation)
    std::vector<hull_slope> slopes;    // strictly increasing slopes
    long origin_order = 0;
    certified_bound bound;
};

namespace detail {

template <valued_field F>
std::vector<hull_point> known_points(const F& k, const trunc_series<F>& s) {
    std::vector<hull_point> pts;
    for (long i = 0; i < s.order; ++i)
        if (auto v = k.valuation(s.c[i])) pts.push_back({i, *v});
    return pts;
}

// The known part dominates the tail at log-radius t when
//   max_k (k*t - v_k)  >  sup_{i >= order} (i*t - beta - sigma*i),
// the right side being -beta + order*(t - sigma) for t <= sigma and
// unbounded past sigma.  Strict domination certifies closed disks; ties are
// enough for open disks because a tail term can only tie at a larger
// exponent, which leaves the smallest maximizer (the open count) intact.
template <valued_field F>
bool count_certified(const F& k, const trunc_series<F>& s,
                     const std::vector<hull_point>& pts, const rat& t, bool closed) {
    if (s.tail_zero) return true;
    if (t > s.env.sigma) return false;
    rat tail_sup = -s.env.beta + (t - s.env.sigma) * s.order;
    std::optional<rat> c;
    for (const auto& p : pts) {
        rat cand = t * p.x - p.y;
        if (!c || cand > *c) c = cand;
    }
    if (!c) return false;
    return closed ? tail_sup < *c : tail_sup <= *c;
}

}  // namespace detail

template <valued_field F>
certified_bound series_certified_bound(const F& k, const trunc_series<F>& s) {
    if (s.tail_zero) return {true, rat(0), false};
    std::optional<rat> tstar;
    for (long i = 0; i < s.order; ++i) {
        auto v = k.valuation(s.c[i]);
        if (!v) continue;
        // Threshold where the tail floor at the order exponent catches up
        // with this coefficient's term.
        rat cand = (s.env.beta + s.env.sigma * s.order - *v) / (s.order - i);
        if (!tstar || cand > *tstar) tstar = cand;
    }
    if (!tstar) throw all_zero_up_to_order("no nonzero coefficient is known");
    if (*tstar > s.env.sigma) return {false, s.env.sigma, true};
    return {false, *tstar, false};
}

template <valued_field F>
newton_polygon_t newton_polygon(const F& k, const trunc_series<F>& s) {
    auto pts = detail::known_points(k, s);
    if (pts.empty()) {
        if (s.tail_zero) throw zero_polynomial("polygon of the zero series");
        throw all_zero_up_to_order("no nonzero coefficient is known");
    }
    newton_polygon_t out;
    out.origin_order = pts.front().x;
    out.vertices = lower_hull(pts);
    out.slopes = hull_slopes(out.vertices);
    out.bound = series_certified_bound(k, s);
    return out;
}

// Number of zeros (with multiplicity, origin included) in the disk of
// log-radius t: closed |x| <= p^t or open |x| < p^t.  Equal to the largest
// (closed) or smallest (open) exponent maximizing k*t - v_k.  Raises
// beyond_certified_radius when the truncation cannot support the answer.
template <valued_field F>
long count_zeros_disk(const F& k, const trunc_series<F>& s, const rat& t, bool closed) {
    auto pts = detail::known_points(k, s);
    if (pts.empty()) {
        if (s.tail_zero) throw zero_polynomial("zero counting for the zero series");
        throw all_zero_up_to_order("no nonzero coefficient is known");
    }
    if (!detail::count_certified(k, s, pts, t, closed))
        throw beyond_certified_radius("log-radius " + rat_to_string(t) +
                                      " exceeds the certified bound at order " +
                                      std::to_string(s.order));
    std::optional<rat> best;
    long arg = 0;
    for (const auto& p : pts) {
        rat cand = t * p.x - p.y;
        if (!best || cand > *best || (cand == *best && closed)) {
            best = cand;
            arg = p.x;
        }
    }
    return arg;
}

}  // namespace ultranev

#endif  // ULTRANEV_NEWTON_HPP
