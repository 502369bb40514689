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

#ifndef ULTRANEV_PLFUN_HPP
#define ULTRANEV_PLFUN_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ultranev {

// A segment holds from its breakpoint to the next one (or to the domain end).
struct plf_segment {
    rat bp;
    rat slope;
    bool operator==(const plf_segment&) const = default;
};

/*
 * Exact piecewise-linear function of the log-radius t, on a half-open
 * interval [domain_start, domain_end) with domain_end possibly +infinity
 * (nullopt).  The function is continuous: its value at domain_start is
 * anchor_value and values elsewhere follow by accumulating segment slopes.
 *
 * Canonical form: the first breakpoint equals domain_start, breakpoints are
 * strictly increasing and lie inside the domain, and adjacent segments never
 * share a slope.  Two canonical functions are equal as functions if and only
 * if they compare equal with ==.
 */
class plfun {
  public:
    plfun(rat start, std::optional<rat> end, rat anchor, std::vector<plf_segment> segs)
        : start_(std::move(start)), end_(std::move(end)), anchor_(std::move(anchor)),
          segs_(std::move(segs)) {
        normalize();
    }

    static plfun constant(const rat& start, const std::optional<rat>& end, const rat& value) {
        return plfun(start, end, value, {{start, rat(0)}});
    }

    // Line through (start, anchor) with the given slope.
    static plfun line(const rat& start, const std::optional<rat>& end, const rat& anchor,
                      const rat& slope) {
        return plfun(start, end, anchor, {{start, slope}});
    }

    const rat& domain_start() const { return start_; }
    const std::optional<rat>& domain_end() const { return end_; }
    bool unbounded() const { return !end_.has_value(); }
    const rat& anchor_value() const { return anchor_; }
    const std::vector<plf_segment>& segments() const { return segs_; }

    bool same_domain(const plfun& o) const { return start_ == o.start_ && end_ == o.end_; }

    bool operator==(const plfun&) const = default;

  private:
    void normalize() {
        if (end_ && *end_ <= start_)
            throw std::invalid_argument("plfun: empty domain");
        if (segs_.empty()) segs_.push_back({start_, rat(0)});
        if (segs_.front().bp != start_)
            throw std::invalid_argument("plfun: first breakpoint must equal domain_start");
        for (std::size_t i = 1; i < segs_.size(); ++i)
            if (segs_[i - 1].bp >= segs_[i].bp)
                throw std::invalid_argument("plfun: breakpoints must strictly increase");
        if (end_ && segs_.back().bp >= *end_)
            throw std::invalid_argument("plfun: breakpoint beyond domain end");
        std::vector<plf_segment> merged;
        for (auto& s : segs_) {
            if (!merged.empty() && merged.back().slope == s.slope) continue;
            merged.push_back(s);
        }
        segs_ = std::move(merged);
    }

    rat start_;
    std::optional<rat> end_;
    rat anchor_;
    std::vector<plf_segment> segs_;
};

// Exact value of f at t; t must lie in [domain_start, domain_end).
inline rat plf_eval(const plfun& f, const rat& t) {
    if (t < f.domain_start() || (!f.unbounded() && t >= *f.domain_end()))
        throw out_of_domain("plf_eval at t = " + rat_to_string(t));
    rat v = f.anchor_value();
    const auto& segs = f.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (t <= segs[i].bp) break;
        rat hi = (i + 1 < segs.size()) ? rat_min(t, segs[i + 1].bp) : t;
        v += segs[i].slope * (hi - segs[i].bp);
    }
    return v;
}

// One-sided limit of f at the (finite) domain end.
inline rat plf_end_limit(const plfun& f) {
    if (f.unbounded()) throw out_of_domain("plf_end_limit on an unbounded domain");
    rat v = f.anchor_value();
    const auto& segs = f.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        rat hi = (i + 1 < segs.size()) ? segs[i + 1].bp : *f.domain_end();
        v += segs[i].slope * (hi - segs[i].bp);
    }
    return v;
}

// Slope of the final segment.  Realizes every "up to a bounded term"
// comparison: on an unbounded domain two functions differ by O(1) exactly
// when their eventual slopes agree.
inline rat plf_eventual_slope(const plfun& f) { return f.segments().back().slope; }

namespace detail {

inline std::vector<rat> merged_breakpoints(const plfun& a, const plfun& b) {
    std::vector<rat> bps;
    for (auto& s : a.segments()) bps.push_back(s.bp);
    for (auto& s : b.segments()) bps.push_back(s.bp);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    return bps;
}

// Slope of f on the interval starting at t (t must be a point of the domain).
inline rat slope_at(const plfun& f, const rat& t) {
    const auto& segs = f.segments();
    rat s = segs.front().slope;
    for (auto& seg : segs) {
        if (seg.bp > t) break;
        s = seg.slope;
    }
    return s;
}

}  // namespace detail

// Pointwise maximum.  Crossing points inside an interval become new
// breakpoints, so the result is exact.
inline plfun plf_max(const plfun& a, const plfun& b) {
    if (!a.same_domain(b)) throw domain_mismatch("plf_max");
    std::vector<rat> bps = detail::merged_breakpoints(a, b);
    std::vector<plf_segment> out;
    rat va = a.anchor_value(), vb = b.anchor_value();
    rat anchor = rat_max(va, vb);
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const rat& cur = bps[i];
        std::optional<rat> next;
        if (i + 1 < bps.size()) next = bps[i + 1];
        else if (!a.unbounded()) next = *a.domain_end();
        rat sa = detail::slope_at(a, cur), sb = detail::slope_at(b, cur);
        rat diff = va - vb;
        if (diff == 0) {
            out.push_back({cur, rat_max(sa, sb)});
        } else if (diff > 0) {
            out.push_back({cur, sa});
            if (sb > sa) {
                rat tau = cur + diff / (sb - sa);
                if (!next || tau < *next) out.push_back({tau, sb});
            }
        } else {
            out.push_back({cur, sb});
            if (sa > sb) {
                rat tau = cur - diff / (sa - sb);
                if (!next || tau < *next) out.push_back({tau, sa});
            }
        }
        if (next) {
            va += sa * (*next - cur);
            vb += sb * (*next - cur);
        }
    }
    return plfun(a.domain_start(), a.domain_end(), anchor, std::move(out));
}

// Exact pointwise linear combination sum(coefficient * function).
inline plfun plf_lincomb(const std::vector<std::pair<rat, plfun>>& terms) {
    if (terms.empty()) throw std::invalid_argument("plf_lincomb: no terms");
    const plfun& first = terms.front().second;
    for (auto& [c, f] : terms)
        if (!f.same_domain(first)) throw domain_mismatch("plf_lincomb");
    std::vector<rat> bps;
    for (auto& [c, f] : terms)
        for (auto& s : f.segments()) bps.push_back(s.bp);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    rat anchor = 0;
    for (auto& [c, f] : terms) anchor += c * f.anchor_value();
    std::vector<plf_segment> out;
    for (auto& bp : bps) {
        rat slope = 0;
        for (auto& [c, f] : terms) slope += c * detail::slope_at(f, bp);
        out.push_back({bp, slope});
    }
    return plfun(first.domain_start(), first.domain_end(), anchor, std::move(out));
}

inline plfun plf_add(const plfun& a, const plfun& b) {
    return plf_lincomb({{rat(1), a}, {rat(1), b}});
}

inline plfun plf_scale(const rat& c, const plfun& f) { return plf_lincomb({{c, f}}); }

// Restriction to [new_start, new_end) inside the original domain.
inline plfun plf_restrict(const plfun& f, const rat& new_start,
                          const std::optional<rat>& new_end) {
    if (new_start < f.domain_start()) throw out_of_domain("plf_restrict: start before domain");
    if (new_end) {
        if (!f.unbounded() && *new_end > *f.domain_end())
            throw out_of_domain("plf_restrict: end beyond domain");
    } else if (!f.unbounded()) {
        throw out_of_domain("plf_restrict: cannot unbound a bounded domain");
    }
    rat anchor = plf_eval(f, new_start);
    std::vector<plf_segment> out{{new_start, detail::slope_at(f, new_start)}};
    for (auto& s : f.segments()) {
        if (s.bp <= new_start) continue;
        if (new_end && s.bp >= *new_end) break;
        out.push_back(s);
    }
    return plfun(new_start, new_end, anchor, std::move(out));
}

// Decision data for "a - b stays bounded".  On an unbounded domain the
// difference is bounded exactly when its eventual slope vanishes; slope_gap
// carries the signed eventual slope of a - b.  Whenever the difference is
// bounded, sup_abs holds the exact supremum of |a - b| over the domain.
struct plf_diff {
    bool bounded;
    rat slope_gap;
    std::optional<rat> sup_abs;
};

inline plf_diff plf_bounded_difference(const plfun& a, const plfun& b) {
    if (!a.same_domain(b)) throw domain_mismatch("plf_bounded_difference");
    plfun d = plf_lincomb({{rat(1), a}, {rat(-1), b}});
    plf_diff r;
    r.slope_gap = plf_eventual_slope(d);
    r.bounded = d.unbounded() ? (r.slope_gap == 0) : true;
    if (r.bounded) {
        rat sup = abs(d.anchor_value());
        rat v = d.anchor_value();
        const auto& segs = d.segments();
        for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
            v += segs[i].slope * (segs[i + 1].bp - segs[i].bp);
            sup = rat_max(sup, abs(v));
        }
        if (!d.unbounded()) sup = rat_max(sup, abs(plf_end_limit(d)));
        r.sup_abs = sup;
    }
    return r;
}

}  // namespace ultranev

#endif  // ULTRANEV_PLFUN_HPP
