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

#ifndef ULTRANEV_NEVANLINNA_HPP
#define ULTRANEV_NEVANLINNA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mero.hpp"
#include "plfun.hpp"

namespace ultranev {

// Counting functions of one meromorphic representative, as exact piecewise
// linear functions of the log-radius t.  Z counts zeros with multiplicity,
// N poles, T = max(Z, N); Zt and Nt are the multiplicity-blind variants.
// When the representative was reduced through chi-th roots, Z, N and T carry
// the chi_power factor restoring the original function while Zt and Nt do
// not (a chi-th power has the same zero and pole sets as its root).
struct nev_bundle {
    plfun Z, N, T, Zt, Nt;
    bigint chi_power = 1;
    bool tilde_exact = true;  // every distinct-point count was certified
    certified_bound bound;
};

namespace detail {

// w0 * t plus ramps m * max(0, t - u).  A ramp at u >= end vanishes on the
// whole half-open domain (it records points exactly on the final circle of
// an inclusive bound) and is dropped.
inline plfun counting_plf(const rat& start, const std::optional<rat>& end, long w0,
                          std::vector<std::pair<rat, long>> ramps) {
    std::sort(ramps.begin(), ramps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<plf_segment> segs{{start, rat(w0)}};
    rat slope(w0);
    for (const auto& [u, m] : ramps) {
        if (end && u >= *end) continue;
        slope += m;
        if (u <= start) segs.front().slope = slope;
        else segs.push_back({u, slope});
    }
    return plfun(start, end, rat(w0) * start, std::move(segs));
}

}  // namespace detail

inline nev_bundle nev_from_divisor(const divisor& d, const bigint& chi_power = 1) {
    rat start = 0;
    for (const auto& e : d.entries) start = rat_min(start, e.u);
    std::optional<rat> end;
    if (!d.bound.infinite) {
        end = d.bound.value;
        if (*end <= start) start = *end - 1;
    }

    std::vector<std::pair<rat, long>> zw, pw, zt, pt;
    bool tilde_exact = true;
    for (const auto& e : d.entries) {
        long w = e.mult > 0 ? e.mult : -e.mult;
        long wt = e.distinct > 0 ? e.distinct : w;
        if (e.distinct == 0) tilde_exact = false;
        (e.mult > 0 ? zw : pw).push_back({e.u, w});
        (e.mult > 0 ? zt : pt).push_back({e.u, wt});
    }
    long oz = d.origin > 0 ? d.origin : 0;
    long op = d.origin < 0 ? -d.origin : 0;

    rat cp(chi_power);
    plfun z = plf_scale(cp, detail::counting_plf(start, end, oz, zw));
    plfun n = plf_scale(cp, detail::counting_plf(start, end, op, pw));
    nev_bundle b{z,
                 n,
                 plf_max(z, n),
                 detail::counting_plf(start, end, oz > 0 ? 1 : 0, zt),
                 detail::counting_plf(start, end, op > 0 ? 1 : 0, pt),
                 chi_power,
                 tilde_exact,
                 d.bound};
    return b;
}

// Reduce the representative through maximal chi-th roots, then read counting
// functions off the reduced divisor, restoring the chi_power on Z, N, T.
template <valued_field F>
nev_bundle nev_analyze(const F& k, const mero<F>& f) {
    auto r = ramification_index(k, f);
    bigint cp = 1;
    for (long i = 0; i < r.t; ++i) cp *= bigint(k.chi());
    return nev_from_divisor(mero_divisor(k, r.reduced), cp);
}

namespace detail {

// Restrict piecewise linear functions to their common domain.
inline std::vector<plfun> restrict_common(const std::vector<plfun>& fs) {
    rat start = fs.front().domain_start();
    std::optional<rat> end = fs.front().domain_end();
    for (const auto& f : fs) {
        start = rat_max(start, f.domain_start());
        if (!f.unbounded() && (!end || *f.domain_end() < *end)) end = f.domain_end();
    }
    if (end && *end <= start)
        throw domain_mismatch("certified windows do not overlap");
    std::vector<plfun> out;
    for (const auto& f : fs) out.push_back(plf_restrict(f, start, end));
    return out;
}

}  // namespace detail

enum class asymptotic_status {
    HoldsEventually,
    FailsEventually,
    InconclusiveWithinCertifiedRadius,
};

// Second-main-theorem bookkeeping for n >= 2 pairwise distinct target
// values: with f = (f_s)^(chi^s) maximally reduced,
//   (n-1) T(f_s)  <=  sum_i Zt(f_s - b_i) + Nt(f_s) - t + O(1)
// where b_i is the chi^s-th root of alpha_i (zeros of f - alpha_i and of
// f_s - b_i coincide as sets).  slack is the right side minus the left; on
// an unbounded domain the comparison is decided by its eventual slope.
struct theorem_n_report {
    long n = 0;
    long s = 0;
    bigint chi_s = 1;
    plfun lhs = plfun::constant(rat(0), std::nullopt, rat(0));
    plfun rhs = plfun::constant(rat(0), std::nullopt, rat(0));
    plfun slack = plfun::constant(rat(0), std::nullopt, rat(0));
    asymptotic_status status = asymptotic_status::InconclusiveWithinCertifiedRadius;
    bool tilde_exact = true;
};

template <valued_field F>
theorem_n_report check_theorem_n(const F& k, const mero<F>& f,
                                 const std::vector<typename F::elem>& alphas) {
    long n = static_cast<long>(alphas.size());
    if (n < 2) throw hypothesis_violated("need at least two target values");
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if (k.eq(alphas[i], alphas[j]))
                throw hypothesis_violated("target values must be pairwise distinct");

    auto ram = ramification_index(k, f);
    bigint chi_s = 1;
    for (long i = 0; i < ram.t; ++i) chi_s *= bigint(k.chi());

    auto base = nev_from_divisor(mero_divisor(k, ram.reduced), 1);
    std::vector<plfun> pieces{base.T, base.Nt};
    bool tilde_exact = base.tilde_exact;
    for (const auto& a : alphas) {
        auto b = a;
        for (long i = 0; i < ram.t; ++i) {
            auto r = k.chi_root(b);
            if (!r) throw needs_extension("target value has no chi-th root in the field");
            b = *r;
        }
        auto nb = nev_from_divisor(mero_divisor(k, mero_sub_const(k, ram.reduced, b)), 1);
        tilde_exact = tilde_exact && nb.tilde_exact;
        pieces.push_back(nb.Zt);
    }

    auto common = detail::restrict_common(pieces);
    const plfun& t_fs = common[0];
    plfun log_term = plfun::line(t_fs.domain_start(), t_fs.domain_end(),
                                 -t_fs.domain_start(), rat(-1));
    std::vector<std::pair<rat, plfun>> rhs_terms{{rat(1), common[1]}, {rat(1), log_term}};
    for (std::size_t i = 2; i < common.size(); ++i) rhs_terms.push_back({rat(1), common[i]});

    theorem_n_report rep;
    rep.n = n;
    rep.s = ram.t;
    rep.chi_s = chi_s;
    rep.lhs = plf_scale(rat(n - 1), t_fs);
    rep.rhs = plf_lincomb(rhs_terms);
    rep.slack = plf_add(rep.rhs, plf_scale(rat(-1), rep.lhs));
    rep.tilde_exact = tilde_exact;
    if (rep.slack.unbounded())
        rep.status = plf_eventual_slope(rep.slack) >= 0 ? asymptotic_status::HoldsEventually
                                                        : asymptotic_status::FailsEventually;
    else
        rep.status = asymptotic_status::InconclusiveWithinCertifiedRadius;
    return rep;
}

// T(P(f)) = deg(P) * T(f) + O(1) for a nonconstant reduced map P.
struct degree_identity_report {
    long map_degree = 0;
    plfun lhs = plfun::constant(rat(0), std::nullopt, rat(0));
    plfun rhs = plfun::constant(rat(0), std::nullopt, rat(0));
    plf_diff diff{true, rat(0), rat(0)};
    asymptotic_status status = asymptotic_status::InconclusiveWithinCertifiedRadius;
};

template <valued_field F>
degree_identity_report check_degree_identity(const F& k, const ratmap<F>& p, const mero<F>& f) {
    degree_identity_report rep;
    rep.map_degree = ratmap_degree(k, p);
    if (rep.map_degree == 0) throw hypothesis_violated("constant map has no degree identity");
    auto bf = nev_from_divisor(mero_divisor(k, f));
    auto bp = nev_from_divisor(mero_divisor(k, compose_ratmap(k, p, f)));
    auto common = detail::restrict_common({bp.T, bf.T});
    rep.lhs = common[0];
    rep.rhs = plf_scale(rat(rep.map_degree), common[1]);
    rep.diff = plf_bounded_difference(rep.lhs, rep.rhs);
    if (rep.lhs.unbounded())
        rep.status = rep.diff.slope_gap == 0 ? asymptotic_status::HoldsEventually
                                             : asymptotic_status::FailsEventually;
    else
        rep.status = asymptotic_status::InconclusiveWithinCertifiedRadius;
    return rep;
}

// Consistency of P(f) = Q(g) to the working order, by cross-multiplying the
// two composite representatives and comparing known coefficients.  exact is
// set when both sides are exact polynomial data, making the identity proven
// rather than merely consistent.
struct pq_report {
    bool consistent = false;
    bool exact = false;
    long checked_order = 0;
    long lhs_x_power = 0, rhs_x_power = 0;
};

template <valued_field F>
pq_report check_pq_relation(const F& k, const ratmap<F>& p, const mero<F>& f,
                            const ratmap<F>& q, const mero<F>& g) {
    auto lhs = compose_ratmap(k, p, f);
    auto rhs = compose_ratmap(k, q, g);
    pq_report rep;
    rep.lhs_x_power = lhs.x_power;
    rep.rhs_x_power = rhs.x_power;
    auto a = series_mul(k, lhs.num, rhs.den);
    auto b = series_mul(k, rhs.num, lhs.den);
    rep.checked_order = std::min(a.order, b.order);
    rep.consistent = lhs.x_power == rhs.x_power && series_known_eq(k, a, b);
    rep.exact = rep.consistent && a.tail_zero && b.tail_zero;
    return rep;
}

// Eventual-slope comparison Nt(g) <= lambda * T(f).
struct lambda_bound_report {
    rat pole_slope, t_slope, lambda;
    bool holds = false;
    bool eventual = false;  // true when both domains are unbounded
};

template <valued_field F>
lambda_bound_report check_lambda_bound(const F& k, const mero<F>& f, const mero<F>& g,
                                       const rat& lambda) {
    auto bf = nev_analyze(k, f);
    auto bg = nev_analyze(k, g);
    lambda_bound_report rep;
    rep.lambda = lambda;
    rep.pole_slope = plf_eventual_slope(bg.Nt);
    rep.t_slope = plf_eventual_slope(bf.T);
    rep.holds = rep.pole_slope <= lambda * rep.t_slope;
    rep.eventual = bf.T.unbounded() && bg.Nt.unbounded();
    return rep;
}

// ---------------------------------------------------------------------------
// Growth classification toward the boundary of the open unit disk (t -> 0-).
// ---------------------------------------------------------------------------

enum class growth_class { BoundedType, UnboundedType, InconclusiveAtOrder };

struct growth_report {
    growth_class cls = growth_class::InconclusiveAtOrder;
    certified_bound bound;
    std::optional<rat> last_u;  // largest certified zero or pole radius
};

// A representative certified on the whole open unit disk has finitely many
// zeros and poles there, so its characteristic stays bounded as t -> 0-.
// Otherwise unbounded growth cannot be proven from finitely many
// coefficients; the UnboundedType answer is extrapolation evidence: counting
// still grows at the certified end and the latest zero or pole sits at least
// as close to that end as the end sits to the boundary, so activity persists
// at the scale of the unexplored tail.
inline growth_report classify_boundedness(const divisor& d) {
    growth_report rep;
    rep.bound = d.bound;
    for (const auto& e : d.entries)
        if (!rep.last_u || e.u > *rep.last_u) rep.last_u = e.u;
    if (d.bound.infinite || d.bound.value >= 0) {
        rep.cls = growth_class::BoundedType;
        return rep;
    }
    if (!rep.last_u) return rep;
    auto b = nev_from_divisor(d);
    rat gap = d.bound.value - *rep.last_u;
    if (plf_eventual_slope(b.T) > 0 && gap <= -d.bound.value)
        rep.cls = growth_class::UnboundedType;
    return rep;
}

template <valued_field F>
growth_report classify_boundedness(const F& k, const mero<F>& f) {
    return classify_boundedness(mero_divisor(k, f));
}

}  // namespace ultranev

#endif  // ULTRANEV_NEVANLINNA_HPP
