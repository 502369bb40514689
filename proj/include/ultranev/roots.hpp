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

#ifndef ULTRANEV_ROOTS_HPP
#define ULTRANEV_ROOTS_HPP

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "convex.hpp"
#include "poly.hpp"

namespace ultranev {

// Roots found in the coefficient field itself.  Unresolved entries are
// monic squarefree factors whose roots exist only in an extension (or were
// out of reach of the candidate search), together with their multiplicity
// in the input.  complete means every root was accounted for exactly.
template <valued_field F>
struct root_set {
    std::vector<std::pair<typename F::elem, long>> roots;
    std::vector<std::pair<poly<F>, long>> unresolved;
    bool complete = false;
};

// Candidate values worth testing as roots when no closed form applies.
template <valued_field F>
std::vector<typename F::elem> root_candidates(const F& k, const poly<F>& f) {
    std::vector<typename F::elem> out;
    if constexpr (std::is_same_v<F, padic_rationals> ||
                  std::is_same_v<F, simple_extension>) {
        // Rational root screening; for extensions only rational-coefficient
        // inputs are screened (embedded through the base field).
        std::vector<rat> rc;
        rc.reserve(f.c.size());
        for (const auto& e : f.c) {
            if constexpr (std::is_same_v<F, padic_rationals>) {
                rc.push_back(e);
            } else {
                for (std::size_t i = 1; i < e.c.size(); ++i)
                    if (e.c[i] != 0) return out;
                rc.push_back(e.c[0]);
            }
        }
        if (rc.empty()) return out;
        if (rc.front() == 0) out.push_back(k.zero());
        std::size_t lo = 0;
        while (lo < rc.size() && rc[lo] == 0) ++lo;
        bigint scale = 1;
        for (const auto& c : rc) {
            rat t = c;
            bigint d = boost::multiprecision::denominator(t);
            scale = scale / boost::multiprecision::gcd(scale, d) * d;
        }
        try {
            rat c0 = rc[lo] * scale;
            rat cn = rc.back() * scale;
            auto ps = detail::small_divisors(boost::multiprecision::numerator(c0));
            auto qs = detail::small_divisors(boost::multiprecision::numerator(cn));
            for (const auto& pn : ps)
                for (const auto& qn : qs)
                    for (int sg : {1, -1}) {
                        out.push_back(k.from_rat(rat(pn * sg, qn)));
                    }
        } catch (const field_error&) {
            // Coefficients too large to screen; report nothing.
        }
    } else if constexpr (std::is_same_v<F, tadic_functions>) {
        for (unsigned r = 0; r < k.pi(); ++r) out.push_back(k.from_int(r));
    }
    return out;
}

namespace detail {

// Splits a monic squarefree polynomial into field roots plus a leftover
// factor with no roots found.  Degree one and two are closed-form (the
// latter through the field's square root); higher degrees fall back to the
// candidate screen, peeling one root at a time.
template <valued_field F>
std::pair<std::vector<typename F::elem>, poly<F>> resolve_squarefree(const F& k,
                                                                     poly<F> f) {
    std::vector<typename F::elem> roots;
    while (true) {
        long d = ideg(f);
        if (d <= 0) {
            f = poly_one(k);
            break;
        }
        if (d == 1) {
            roots.push_back(k.neg(k.div(f.c[0], f.c[1])));
            f = poly_one(k);
            break;
        }
        if (d == 2 && k.characteristic() != 2) {
            // Monic-ize and solve x^2 + bx + c through the discriminant.
            auto b = k.div(f.c[1], f.c[2]);
            auto c = k.div(f.c[0], f.c[2]);
            auto disc = k.sub(k.mul(b, b), k.mul(k.from_int(4), c));
            auto s = k.sqrt(disc);
            if (!s) break;
            auto two = k.from_int(2);
            roots.push_back(k.div(k.sub(*s, b), two));
            roots.push_back(k.div(k.sub(k.neg(*s), b), two));
            f = poly_one(k);
            break;
        }
        bool found = false;
        for (const auto& cand : root_candidates(k, f)) {
            if (k.is_zero(poly_eval(k, f, cand))) {
                roots.push_back(cand);
                poly<F> lin;
                lin.c = {k.neg(cand), k.one()};
                f = poly_div(k, f, lin);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return {std::move(roots), std::move(f)};
}

}  // namespace detail

template <valued_field F>
root_set<F> roots_exact(const F& k, const poly<F>& f) {
    if (f.c.empty()) throw zero_polynomial("root extraction");
    root_set<F> out;
    for (auto& sf : squarefree_factorization(k, f)) {
        auto [roots, leftover] = detail::resolve_squarefree(k, std::move(sf.factor));
        for (auto& r : roots) out.roots.emplace_back(std::move(r), sf.multiplicity);
        if (detail::ideg(leftover) > 0)
            out.unresolved.emplace_back(std::move(leftover), sf.multiplicity);
    }
    out.complete = out.unresolved.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting of p-adic roots to a requested precision.
// ---------------------------------------------------------------------------

struct hensel_root {
    rat approximant;
    long precision;  // v_p(root - approximant) >= valuation + precision
    std::optional<rat> valuation;  // nullopt only for the zero root
    long multiplicity;
    bool exact;  // closed-form root; the approximant is the root itself
};

struct hensel_result {
    std::vector<hensel_root> roots;
    // Roots that exist (per the valuation polygon) but admit no certified
    // approximant in Q_p: fractional valuations, inert residue factors, or
    // repeated residue roots.  Counted with multiplicity.
    std::vector<std::pair<rat, long>> unlifted;
    bool complete = false;
};

namespace detail {

inline bigint bigint_pow(const bigint& b, long e) {
    bigint r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// Canonical residue of a p-integral rational modulo p^m.
inline bigint rat_mod_pm(const rat& x, const bigint& p, const bigint& pm) {
    rat t = x;
    bigint num = boost::multiprecision::numerator(t);
    bigint den = boost::multiprecision::denominator(t);
    bigint phi = pm - pm / p;  // Euler phi of p^m
    bigint dinv = boost::multiprecision::powm(den % pm, phi - 1, pm);
    bigint r = ((num % pm) * dinv) % pm;
    if (r < 0) r += pm;
    return r;
}

// Newton iteration from a simple residue root, doubling accuracy.
inline rat hensel_lift(const padic_rationals& k, const poly<padic_rationals>& g,
                       const poly<padic_rationals>& dg, bigint r, long target) {
    const bigint& p = k.p();
    long m = 1;
    rat y(r);
    while (m < target) {
        m = std::min(2 * m, target);
        bigint pm = bigint_pow(p, m);
        rat fy = poly_eval(k, g, y);
        rat dfy = poly_eval(k, dg, y);
        y = y - fy / dfy;
        y = rat(rat_mod_pm(y, p, pm));
    }
    return y;
}

}  // namespace detail

// Approximates the roots of f in Q_p: exact closed forms where available,
// otherwise valuation-polygon segmentation plus Newton lifting of simple
// residue roots to the requested unit-part precision.
inline hensel_result roots_hensel(const padic_rationals& k, const poly<padic_rationals>& f,
                                  long precision) {
    if (f.c.empty()) throw zero_polynomial("root approximation");
    if (precision < 1) throw hypothesis_violated("precision must be at least 1");
    hensel_result out;
    const bigint& p = k.p();

    for (auto& sf : squarefree_factorization(k, f)) {
        auto [roots, leftover] = detail::resolve_squarefree(k, sf.factor);
        for (auto& r : roots)
            out.roots.push_back(
                {r, precision, k.valuation(r), sf.multiplicity, true});
        long ld = detail::ideg(leftover);
        if (ld <= 0) continue;
        if (p > 100000) {
            // Residue search space too large; report by valuation only.
            std::vector<hull_point> pts;
            for (std::size_t i = 0; i < leftover.c.size(); ++i)
                if (auto v = k.valuation(leftover.c[i]))
                    pts.push_back({static_cast<long>(i), *v});
            for (const auto& s : hull_slopes(lower_hull(pts)))
                out.unlifted.emplace_back(-s.slope, s.length * sf.multiplicity);
            continue;
        }

        std::vector<hull_point> pts;
        for (std::size_t i = 0; i < leftover.c.size(); ++i)
            if (auto v = k.valuation(leftover.c[i]))
                pts.push_back({static_cast<long>(i), *v});
        auto verts = lower_hull(pts);
        auto segs = hull_slopes(verts);
        for (std::size_t si = 0; si < segs.size(); ++si) {
            rat root_val = -segs[si].slope;
            long len = segs[si].length;
            rat rv = root_val;
            if (boost::multiprecision::denominator(rv) != 1) {
                out.unlifted.emplace_back(root_val, len * sf.multiplicity);
                continue;
            }
            long v = static_cast<long>(boost::multiprecision::numerator(rv));
            // Unit-part polynomial g(y) = f(p^v y) / p^mu.
            poly<padic_rationals> g = leftover;
            std::optional<rat> mu;
            for (std::size_t i = 0; i < g.c.size(); ++i) {
                if (g.c[i] == 0) continue;
                g.c[i] *= rat_pow(rat(p), v * static_cast<long>(i));
                auto vi = k.valuation(g.c[i]);
                if (!mu || *vi < *mu) mu = *vi;
            }
            rat unscale = rat_pow(rat(p), -static_cast<long>(
                boost::multiprecision::numerator(*mu)));
            for (auto& c : g.c) c *= unscale;
            // Residue polynomial; the slope-0 block sits above y^i0.
            long i0 = verts[si].x;
            detail::fp_poly h;
            unsigned pu = static_cast<unsigned>(p);
            h.c.assign(len + 1, 0);
            for (long i = 0; i <= len; ++i) {
                const rat& c = g.c[i0 + i];
                if (c == 0) continue;
                if (*k.valuation(c) > 0) continue;
                h.c[i] = static_cast<unsigned>(detail::rat_mod_pm(c, p, p));
            }
            detail::fpp_trim(h);
            auto dh = h;
            {
                detail::fp_poly d;
                for (std::size_t i = 1; i < h.c.size(); ++i)
                    d.c.push_back(detail::fp_mul(h.c[i],
                                                 static_cast<unsigned>(i % pu), pu));
                detail::fpp_trim(d);
                dh = d;
            }
            poly<padic_rationals> dgp = poly_derivative(k, g);
            long lifted = 0;
            for (unsigned r = 0; r < pu; ++r) {
                if (detail::fpp_eval(h, r, pu) != 0) continue;
                if (detail::fpp_eval(dh, r, pu) == 0) continue;  // repeated residue root
                rat y = detail::hensel_lift(k, g, dgp, bigint(r), precision);
                out.roots.push_back({y * rat_pow(rat(p), v), precision, rat(v),
                                     sf.multiplicity, false});
                ++lifted;
            }
            if (lifted < len)
                out.unlifted.emplace_back(root_val, (len - lifted) * sf.multiplicity);
        }
    }
    out.complete = out.unlifted.empty();
    return out;
}

}  // namespace ultranev

#endif  // ULTRANEV_ROOTS_HPP
