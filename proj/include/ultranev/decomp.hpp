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

#ifndef ULTRANEV_DECOMP_HPP
#define ULTRANEV_DECOMP_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "ratmap.hpp"
#include "rational.hpp"
#include "roots.hpp"

namespace ultranev {

// Verification of the five-clause hypothesis on a rational pair (P, Q) and
// the verdict engine built on it.  Writing P = R/S and Q = V/W in lowest
// terms with monic denominators, the clauses are:
//   (1) neither derivative vanishes identically;
//   (2) both maps are normalized as above;
//   (3) P' has k > 0 zeros c_1..c_k, and for every zero d of the guard
//       polynomial V' - P(c_i)W' both W(d) != 0 and Q(d) != P(c_i);
//   (4) the critical values P(c_i) are pairwise distinct;
//   (5) if deg V = deg W then no P(c_i) equals lc(V)/lc(W).
// The guard in (3) matters because its zeros are exactly the points where
// Q - P(c_i) can acquire a multiple zero or collide with a pole.

enum class m_status { yes, no, yes_at_precision, inconclusive };

// Per-critical-point record of the clause (3) check.  When every zero of
// the guard lies in the declared field the zeros are listed with the exact
// values Q(d); otherwise nonvanishing is certified through resultants,
// which decide the closure quantifier without root extraction.
template <valued_field F>
struct guard_check {
    long index = 0;                  // position in the critical point list
    bool identically_zero = false;   // the guard polynomial vanished
    bool roots_enumerated = false;   // zeros below exhaust the closure zeros
    std::vector<typename F::elem> zeros;  // distinct guard zeros, when enumerated
    std::vector<typename F::elem> q_at;   // Q(d) per zero with W(d) != 0
    bool w_nonzero = true;           // W(d) != 0 at every guard zero
    bool value_avoided = true;       // Q(d) != P(c_i) at every guard zero
    std::string certificate;         // how the two flags were established
};

template <valued_field F>
struct cond_m_report {
    m_status satisfied = m_status::inconclusive;
    int failing_clause = 0;          // smallest failing clause when status is no
    std::string reason;              // explanation for no / inconclusive
    long k = 0;                      // distinct zeros of P' in the declared field
    root_set<F> critical_points;     // zeros of P' with multiplicities
    std::vector<typename F::elem> critical_values;  // P(c_i), aligned with roots
    std::vector<guard_check<F>> guard_checks;
    std::string monic_note =
        "denominators are normalized monic; the unit-value clause compares "
        "critical values against the leading-coefficient ratio of the target";
};

namespace detail {

// Numerator of P' with every factor shared with the denominator removed:
// N = R'S - RS' vanishes at poles of P as well, and those zeros are not
// critical points.  Repeated gcd division strips the full S-content.
template <valued_field F>
poly<F> critical_numerator(const F& k, const ratmap<F>& pm) {
    poly<F> n = poly_sub(k, poly_mul(k, poly_derivative(k, pm.num), pm.den),
                         poly_mul(k, pm.num, poly_derivative(k, pm.den)));
    if (poly_is_zero(k, n)) return n;
    for (;;) {
        poly<F> g = poly_gcd(k, n, pm.den);
        if (ideg(g) <= 0) break;
        n = poly_div(k, n, g);
    }
    return n;
}

}  // namespace detail

template <valued_field F>
cond_m_report<F> check_condition_m(const F& k, const ratmap<F>& pm,
                                   const ratmap<F>& qm) {
    cond_m_report<F> rep;

    // Clause (1): both derivatives nonzero.
    poly<F> np = poly_sub(k, poly_mul(k, poly_derivative(k, pm.num), pm.den),
                          poly_mul(k, pm.num, poly_derivative(k, pm.den)));
    poly<F> nq = poly_sub(k, poly_mul(k, poly_derivative(k, qm.num), qm.den),
                          poly_mul(k, qm.num, poly_derivative(k, qm.den)));
    if (poly_is_zero(k, np) || poly_is_zero(k, nq)) {
        rep.satisfied = m_status::no;
        rep.failing_clause = 1;
        rep.reason = poly_is_zero(k, np)
                         ? "the source map has identically zero derivative"
                         : "the target map has identically zero derivative";
        return rep;
    }

    // Critical points: closure zeros of P', demanded inside the declared
    // field.  Unresolved factors force an inconclusive report; the clause
    // comparisons are never guessed.
    rep.critical_points = roots_exact(k, detail::critical_numerator(k, pm));
    rep.k = static_cast<long>(rep.critical_points.roots.size());
    if (!rep.critical_points.complete) {
        rep.satisfied = m_status::inconclusive;
        rep.reason = "critical points of the source map are not resolved in "
                     "the declared field";
        return rep;
    }
    if (rep.k == 0) {
        rep.satisfied = m_status::no;
        rep.failing_clause = 3;
        rep.reason = "the source map has no critical points";
        return rep;
    }
    for (const auto& [c, mult] : rep.critical_points.roots)
        rep.critical_values.push_back(ratmap_eval(k, pm, c));

    const poly<F>& vp = qm.num;
    const poly<F>& wp = qm.den;
    poly<F> vd = poly_derivative(k, vp);
    poly<F> wd = poly_derivative(k, wp);

    // Clause (3): guard zeros avoid the critical value and the poles.
    bool clause3 = true;
    for (long i = 0; i < rep.k; ++i) {
        const auto& value = rep.critical_values[static_cast<std::size_t>(i)];
        guard_check<F> gc;
        gc.index = i;
        poly<F> guard = poly_sub(k, vd, poly_scale(k, wd, value));
        poly<F> shift = poly_sub(k, vp, poly_scale(k, wp, value));
        if (poly_is_zero(k, guard)) {
            // Every point is a guard zero: the clause can only hold with a
            // constant denominator and a target that never takes the value.
            gc.identically_zero = true;
            gc.w_nonzero = detail::ideg(wp) == 0;
            gc.value_avoided = detail::ideg(shift) == 0;
            gc.certificate = "guard vanishes identically; denominator and "
                             "shifted target must both be nonzero constants";
        } else if (auto gz = roots_exact(k, guard); gz.complete) {
            gc.roots_enumerated = true;
            for (auto& [d, dm] : gz.roots) {
                auto wv = poly_eval(k, wp, d);
                if (k.is_zero(wv)) {
                    gc.w_nonzero = false;
                } else {
                    auto qv = k.div(poly_eval(k, vp, d), wv);
                    if (k.eq(qv, value)) gc.value_avoided = false;
                    gc.q_at.push_back(std::move(qv));
                }
                gc.zeros.push_back(std::move(d));
            }
            gc.certificate = "guard zeros enumerated in the declared field";
        } else {
            // Zeros live outside the declared field.  A nonzero resultant
            // certifies the absence of common closure zeros, which is the
            // exact content of the clause.
            gc.w_nonzero =
                detail::ideg(wp) == 0 ||
                !k.is_zero(poly_resultant(k, guard, wp));
            gc.value_avoided =
                poly_is_zero(k, shift)
                    ? false
                    : (detail::ideg(shift) == 0 ||
                       !k.is_zero(poly_resultant(k, guard, shift)));
            gc.certificate = "nonzero resultants of the guard against the "
                             "denominator and the shifted target";
        }
        clause3 = clause3 && gc.w_nonzero && gc.value_avoided;
        rep.guard_checks.push_back(std::move(gc));
    }

    // Clause (4): pairwise distinct critical values.
    bool clause4 = true;
    for (std::size_t i = 0; i + 1 < rep.critical_values.size() && clause4; ++i)
        for (std::size_t j = i + 1; j < rep.critical_values.size(); ++j)
            if (k.eq(rep.critical_values[i], rep.critical_values[j])) {
                clause4 = false;
                break;
            }

    // Clause (5): for equal numerator/denominator degrees the value
    // lc(V)/lc(W) drops the degree of V - P(c_i)W and must be avoided.
    bool clause5 = true;
    if (detail::ideg(vp) == detail::ideg(wp)) {
        auto ratio = k.div(poly_lc(k, vp), poly_lc(k, wp));
        for (const auto& value : rep.critical_values)
            if (k.eq(value, ratio)) clause5 = false;
    }

    if (!clause3 || !clause4 || !clause5) {
        rep.satisfied = m_status::no;
        rep.failing_clause = !clause3 ? 3 : (!clause4 ? 4 : 5);
        rep.reason = !clause3 ? "a guard zero meets the critical value or a pole"
                   : !clause4 ? "two critical values coincide"
                              : "a critical value equals the leading-coefficient "
                                "ratio of the target";
        return rep;
    }
    rep.satisfied = m_status::yes;
    return rep;
}

// Local contact data at one critical point: R - P(c)S = (x - c)^s A with
// A(c) != 0, plus the shifted target G = V - P(c)W whose zeros are the
// preimages of the critical value under Q.
template <valued_field F>
struct local_factorization {
    typename F::elem c;
    typename F::elem value;       // P(c)
    long s = 0;                   // contact order, always >= 2
    poly<F> cofactor;             // A above
    poly<F> target_shift;         // G above, squarefree of degree deg Q
};

template <valued_field F>
std::vector<local_factorization<F>> local_factorizations(
    const F& k, const ratmap<F>& pm, const ratmap<F>& qm,
    const cond_m_report<F>& rep) {
    if (rep.satisfied != m_status::yes &&
        rep.satisfied != m_status::yes_at_precision)
        throw hypothesis_violated("local factorization requires a verified clause set");

    const long p = std::max(detail::ideg(pm.num), detail::ideg(pm.den));
    const long q = std::max(detail::ideg(qm.num), detail::ideg(qm.den));
    std::vector<local_factorization<F>> out;
    for (std::size_t i = 0; i < rep.critical_points.roots.size(); ++i) {
        local_factorization<F> lf;
        lf.c = rep.critical_points.roots[i].first;
        lf.value = rep.critical_values[i];

        poly<F> lin = poly_from_coeffs(k, {k.neg(lf.c), k.one()});
        poly<F> a = poly_sub(k, pm.num, poly_scale(k, pm.den, lf.value));
        while (!poly_is_zero(k, a) && k.is_zero(poly_eval(k, a, lf.c))) {
            auto [quo, rem] = poly_divmod(k, a, lin);
            if (!poly_is_zero(k, rem))
                throw factorization_mismatch("inexact division by a root factor");
            a = std::move(quo);
            ++lf.s;
        }
        lf.cofactor = std::move(a);
        if (lf.s < 2)
            throw factorization_mismatch("contact order below two at a critical point");
        if (poly_is_zero(k, lf.cofactor) ||
            detail::ideg(lf.cofactor) > p - lf.s)
            throw factorization_mismatch("cofactor degree exceeds its bound");
        poly<F> rebuilt =
            poly_add(k, poly_mul(k, poly_pow(k, lin, lf.s), lf.cofactor),
                     poly_scale(k, pm.den, lf.value));
        if (!poly_eq(k, rebuilt, pm.num))
            throw factorization_mismatch("contact factorization does not rebuild the numerator");
        if (detail::ideg(poly_gcd(k, lf.cofactor, pm.den)) > 0)
            throw factorization_mismatch("cofactor shares a factor with the denominator");

        lf.target_shift = poly_sub(k, qm.num, poly_scale(k, qm.den, lf.value));
        if (detail::ideg(lf.target_shift) != q)
            throw factorization_mismatch("shifted target dropped degree");
        poly<F> gd = poly_derivative(k, lf.target_shift);
        if (poly_is_zero(k, gd)
                ? detail::ideg(lf.target_shift) > 0
                : detail::ideg(poly_gcd(k, lf.target_shift, gd)) > 0)
            throw factorization_mismatch("shifted target is not squarefree");
        if (detail::ideg(poly_gcd(k, lf.target_shift, qm.den)) > 0)
            throw factorization_mismatch("shifted target shares a zero with the poles");
        out.push_back(std::move(lf));
    }
    // Cross checks: distinct shifts differ by a nonzero multiple of W, so
    // their zero sets (the preimages of distinct critical values) are
    // disjoint; the resultant certifies that without root extraction.
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            poly<F> diff = poly_sub(k, out[i].target_shift, out[j].target_shift);
            poly<F> expect = poly_scale(
                k, qm.den, k.sub(out[j].value, out[i].value));
            if (!poly_eq(k, diff, expect))
                throw factorization_mismatch("shift difference is not a multiple of the denominator");
            if (k.is_zero(poly_resultant(k, out[i].target_shift, out[j].target_shift)))
                throw factorization_mismatch("shifted targets share a zero");
        }
    return out;
}

template <valued_field F>
long theta(const std::vector<local_factorization<F>>& facts) {
    long t = 0;
    for (const auto& lf : facts) t += lf.s - 2;
    return t;
}

// Case table for the pole-bound coefficient.  With r = deg R, s = deg S,
// v = deg V, w = deg W, p = max(r,s), q = max(v,w) and g(.) the number of
// distinct closure zeros, the coefficient bounds the reduced pole count of
// any solution g in terms of the gauge of f.
struct lambda_report {
    int case_no = 0;
    rat value = 0;
    long gamma_r = -1;  // distinct zeros of R, when the case consults it
    long gamma_s = -1;  // distinct zeros of S, when the case consults it
};

template <valued_field F>
lambda_report lambda_class(const F& k, const ratmap<F>& pm, const ratmap<F>& qm) {
    const long r = detail::ideg(pm.num), s = detail::ideg(pm.den);
    const long v = detail::ideg(qm.num), w = detail::ideg(qm.den);
    const long p = std::max(r, s), q = std::max(v, w);
    if (p <= 0 || q <= 0)
        throw hypothesis_violated("the pole-bound table requires nonconstant maps");
    lambda_report rep;
    const rat pq = rat(p) / rat(q);
    if (v == w) {
        rep.case_no = 1;
        rep.value = pq;
    } else if (v < w && r >= s) {
        rep.case_no = 2;
        rep.gamma_r = distinct_zero_count(k, pm.num);
        rep.value = rat_min(rat(rep.gamma_r), pq);
    } else if (v > w && r <= s) {
        rep.case_no = 3;
        rep.gamma_s = distinct_zero_count(k, pm.den);
        rep.value = rat_min(rat(rep.gamma_s), pq);
    } else if (v > w && r > s) {
        rep.case_no = 4;
        rep.gamma_s = distinct_zero_count(k, pm.den);
        rep.value = rat_min(rat(rep.gamma_s + 1), pq);
    } else {  // v < w && r < s
        rep.case_no = 5;
        rep.gamma_r = distinct_zero_count(k, pm.num);
        rep.value = rat_min(rat(rep.gamma_r + 1), pq);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Verdict engine.  Each theorem states a necessary inequality on solutions;
// the engine outputs RuledOut when the inequality contradicts existence and
// Inconclusive otherwise.  It never claims solutions exist.
// ---------------------------------------------------------------------------

enum class verdict_setting {
    entire_on_k,
    analytic_unbounded_disk,
    mero_on_k,
    mero_unbounded_disk,
    entire_value_count,      // critical-value count vs target degree route
    entire_forced_constant,  // distinct-critical-value constancy route
};

// Wire identifiers fixed by the output format.
inline const char* verdict_setting_name(verdict_setting s) {
    switch (s) {
        case verdict_setting::entire_on_k: return "EntireOnK";
        case verdict_setting::analytic_unbounded_disk: return "AnalyticUnboundedDisk";
        case verdict_setting::mero_on_k: return "MeroOnK";
        case verdict_setting::mero_unbounded_disk: return "MeroUnboundedDisk";
        case verdict_setting::entire_value_count: return "AnalyticOnK_Thm214";
        case verdict_setting::entire_forced_constant: return "AnalyticOnK_Cor216";
    }
    return "?";
}

// Everything needed to recompute the conclusion by hand.  Fields that a
// given setting does not consult keep their sentinels (-1 for counts, 0 for
// the case number).
struct verdict_trace {
    long p = 0, q = 0, k = 0;
    std::vector<long> s;       // contact orders, aligned with critical points
    long theta = 0;            // sum of (s_i - 2)
    long gamma_w = -1;
    int lambda_case = 0;
    rat lambda = 0;
    rat lhs = 0, rhs = 0;      // decisive inequality, evaluated
    std::string relation;      // "lhs REL rhs" rules solutions out
    bool relation_holds = false;
    std::vector<std::string> notes;
};

struct verdict {
    verdict_setting setting = verdict_setting::entire_on_k;
    bool ruled_out = false;
    std::string reason;        // nonempty exactly when inconclusive
    verdict_trace trace;
};

namespace detail {

inline void note_positive_characteristic(const bigint& chi, verdict_trace& tr) {
    if (chi > 1)
        tr.notes.push_back(
            "positive characteristic: chi-th-root reduction of any solution "
            "pair preserves k, p and q, so the verdict covers reduced "
            "representatives as well");
}

template <valued_field F>
bool fill_condition_m_data(const F& k, const ratmap<F>& pm, const ratmap<F>& qm,
                           verdict_trace& tr, std::string& reason) {
    tr.p = std::max(ideg(pm.num), ideg(pm.den));
    tr.q = std::max(ideg(qm.num), ideg(qm.den));
    note_positive_characteristic(k.chi(), tr);
    auto rep = check_condition_m(k, pm, qm);
    tr.k = rep.k;
    if (rep.satisfied != m_status::yes) {
        reason = "ConditionMUnverified";
        tr.notes.push_back(rep.reason);
        return false;
    }
    for (const auto& lf : local_factorizations(k, pm, qm, rep))
        tr.s.push_back(lf.s);
    tr.theta = 0;
    for (long si : tr.s) tr.theta += si - 2;
    return true;
}

}  // namespace detail

// Entire / unbounded-analytic settings: any nonconstant solution pair forces
// qk - p < 0 on the whole field and qk - p <= 0 on an open disk.
template <valued_field F>
std::array<verdict, 2> verdict_entire(const F& k, const ratmap<F>& pm,
                                      const ratmap<F>& qm) {
    std::array<verdict, 2> out;
    out[0].setting = verdict_setting::entire_on_k;
    out[1].setting = verdict_setting::analytic_unbounded_disk;
    verdict_trace tr;
    std::string reason;
    if (!detail::fill_condition_m_data(k, pm, qm, tr, reason)) {
        for (auto& v : out) {
            v.reason = reason;
            v.trace = tr;
        }
        return out;
    }
    tr.lhs = rat(tr.q * tr.k - tr.p);
    tr.rhs = 0;
    out[0].trace = tr;
    out[0].trace.relation = ">=";
    out[0].trace.relation_holds = tr.lhs >= tr.rhs;
    out[0].ruled_out = out[0].trace.relation_holds;
    if (!out[0].ruled_out) out[0].reason = "InequalityConsistent";
    out[1].trace = tr;
    out[1].trace.relation = ">";
    out[1].trace.relation_holds = tr.lhs > tr.rhs;
    out[1].ruled_out = out[1].trace.relation_holds;
    if (!out[1].ruled_out) out[1].reason = "InequalityConsistent";
    return out;
}

// Meromorphic settings: solutions force q*theta < p(k*gamma(W) + 1) + q*lambda
// on the whole field, and <= on an open disk.
template <valued_field F>
std::array<verdict, 2> verdict_mero(const F& k, const ratmap<F>& pm,
                                    const ratmap<F>& qm) {
    std::array<verdict, 2> out;
    out[0].setting = verdict_setting::mero_on_k;
    out[1].setting = verdict_setting::mero_unbounded_disk;
    verdict_trace tr;
    std::string reason;
    if (!detail::fill_condition_m_data(k, pm, qm, tr, reason)) {
        for (auto& v : out) {
            v.reason = reason;
            v.trace = tr;
        }
        return out;
    }
    auto inconclusive = [&](const std::string& why, const std::string& note) {
        for (auto& v : out) {
            v.reason = why;
            v.trace = tr;
            if (!note.empty()) v.trace.notes.push_back(note);
        }
        return out;
    };
    if (tr.theta <= 0)
        return inconclusive("ThetaNotPositive",
                            "every contact order equals two, so the excess "
                            "total carries no information");
    try {
        tr.gamma_w = distinct_zero_count(k, qm.den);
        auto lam = lambda_class(k, pm, qm);
        tr.lambda_case = lam.case_no;
        tr.lambda = lam.value;
    } catch (const not_a_chi_power& e) {
        return inconclusive("DistinctZeroCountUnresolved", e.what());
    }
    tr.lhs = rat(tr.q * tr.theta);
    tr.rhs = rat(tr.p) * (rat(tr.k * tr.gamma_w) + 1) + rat(tr.q) * tr.lambda;
    out[0].trace = tr;
    out[0].trace.relation = ">=";
    out[0].trace.relation_holds = tr.lhs >= tr.rhs;
    out[0].ruled_out = out[0].trace.relation_holds;
    if (!out[0].ruled_out) out[0].reason = "InequalityConsistent";
    out[1].trace = tr;
    out[1].trace.relation = ">";
    out[1].trace.relation_holds = tr.lhs > tr.rhs;
    out[1].ruled_out = out[1].trace.relation_holds;
    if (!out[1].ruled_out) out[1].reason = "InequalityConsistent";
    return out;
}

namespace detail {

struct critical_value_count {
    bool derivative_zero = false;
    bool resolved = false;
    long count = 0;
};

// Largest number of zeros of R' with pairwise distinct R-values, i.e. the
// number of distinct critical values of the numerator.
template <valued_field F>
critical_value_count distinct_critical_values(const F& k, const poly<F>& r) {
    critical_value_count out;
    poly<F> rd = poly_derivative(k, r);
    if (poly_is_zero(k, rd)) {
        out.derivative_zero = true;
        return out;
    }
    auto rs = roots_exact(k, rd);
    if (!rs.complete) return out;
    out.resolved = true;
    std::vector<typename F::elem> values;
    for (const auto& [c, mult] : rs.roots) {
        auto val = poly_eval(k, r, c);
        bool seen = false;
        for (const auto& u : values)
            if (k.eq(u, val)) {
                seen = true;
                break;
            }
        if (!seen) values.push_back(std::move(val));
    }
    out.count = static_cast<long>(values.size());
    return out;
}

}  // namespace detail

// Entire route through the numerator pair alone: with k distinct critical
// values of R and l = k - deg V + 1 > 0, unbounded entire solutions force
// deg V (deg R + 1) > (k + 1) deg R; when that fails they are ruled out.
// Here trace.p = deg R and trace.q = deg V.
template <valued_field F>
verdict verdict_entire_value_count(const F& k, const ratmap<F>& pm,
                                   const ratmap<F>& qm) {
    verdict out;
    out.setting = verdict_setting::entire_value_count;
    const long r = detail::ideg(pm.num);
    const long v = detail::ideg(qm.num);
    out.trace.p = r;
    out.trace.q = v;
    detail::note_positive_characteristic(k.chi(), out.trace);
    if (r <= 0 || v <= 0) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back("both numerators must be nonconstant");
        return out;
    }
    auto cvc = detail::distinct_critical_values(k, pm.num);
    if (cvc.derivative_zero) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back("the source numerator has identically zero derivative");
        return out;
    }
    if (!cvc.resolved) {
        out.reason = "RootsUnresolved";
        out.trace.notes.push_back("critical points of the source numerator are "
                                  "not resolved in the declared field");
        return out;
    }
    out.trace.k = cvc.count;
    const long l = cvc.count - v + 1;
    out.trace.notes.push_back("l = k - deg V + 1 = " + std::to_string(l));
    out.trace.notes.push_back(
        "solutions require (k+1)·deg R/(deg R+1) < deg V < deg R");
    out.trace.lhs = rat(v * (r + 1));
    out.trace.rhs = rat((cvc.count + 1) * r);
    out.trace.relation = "<=";
    out.trace.relation_holds = out.trace.lhs <= out.trace.rhs;
    if (l <= 0) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back(
            "the critical-value count does not exceed deg V - 1");
        return out;
    }
    out.ruled_out = out.trace.relation_holds;
    if (!out.ruled_out) out.reason = "InequalityConsistent";
    return out;
}

// Constancy route: when 2 <= min(deg R, deg V), deg R < 2 deg V, and R' has
// deg V zeros with pairwise distinct R-values, every solution pair is
// constant, so nonconstant entire solutions are ruled out.
template <valued_field F>
verdict verdict_entire_forced_constant(const F& k, const ratmap<F>& pm,
                                       const ratmap<F>& qm) {
    verdict out;
    out.setting = verdict_setting::entire_forced_constant;
    const long p = detail::ideg(pm.num);
    const long q = detail::ideg(qm.num);
    out.trace.p = p;
    out.trace.q = q;
    detail::note_positive_characteristic(k.chi(), out.trace);
    if (ratmap_is_zero(k, ratmap_derivative(k, pm)) ||
        ratmap_is_zero(k, ratmap_derivative(k, qm))) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back("a derivative vanishes identically");
        return out;
    }
    if (p < 2 || q < 2) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back("both numerator degrees must be at least two");
        return out;
    }
    if (2 * q <= p) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back(
            "the target numerator degree must exceed half the source degree");
        return out;
    }
    auto cvc = detail::distinct_critical_values(k, pm.num);
    if (cvc.derivative_zero) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back("the source numerator has identically zero derivative");
        return out;
    }
    if (!cvc.resolved) {
        out.reason = "RootsUnresolved";
        out.trace.notes.push_back("critical points of the source numerator are "
                                  "not resolved in the declared field");
        return out;
    }
    out.trace.k = cvc.count;
    out.trace.lhs = rat(cvc.count);
    out.trace.rhs = rat(q);
    out.trace.relation = ">=";
    out.trace.relation_holds = out.trace.lhs >= out.trace.rhs;
    out.ruled_out = out.trace.relation_holds;
    if (!out.ruled_out) {
        out.reason = "HypothesisFails";
        out.trace.notes.push_back("fewer distinct critical values than the "
                                  "target numerator degree");
    } else {
        out.trace.notes.push_back(
            "all solution pairs are constant under these hypotheses");
    }
    return out;
}

}  // namespace ultranev

#endif  // ULTRANEV_DECOMP_HPP
