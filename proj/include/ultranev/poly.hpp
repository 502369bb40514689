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

#ifndef ULTRANEV_POLY_HPP
#define ULTRANEV_POLY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"

namespace ultranev {

// Dense univariate polynomial over a valued field.  Coefficient index is the
// exponent; trailing zeros are trimmed, so the zero polynomial has an empty
// coefficient vector and its degree is reported as nullopt, never -1.
template <valued_field F>
struct poly {
    std::vector<typename F::elem> c;
};

template <valued_field F>
void poly_trim(const F& k, poly<F>& a) {
    while (!a.c.empty() && k.is_zero(a.c.back())) a.c.pop_back();
}

template <valued_field F>
poly<F> poly_from_coeffs(const F& k, std::vector<typename F::elem> c) {
    poly<F> r{std::move(c)};
    poly_trim(k, r);
    return r;
}

template <valued_field F>
poly<F> poly_from_rats(const F& k, const std::vector<rat>& c) {
    std::vector<typename F::elem> e;
    e.reserve(c.size());
    for (const auto& q : c) e.push_back(k.from_rat(q));
    return poly_from_coeffs(k, std::move(e));
}

template <valued_field F>
poly<F> poly_zero(const F&) {
    return {};
}

template <valued_field F>
poly<F> poly_constant(const F& k, typename F::elem e) {
    poly<F> r;
    if (!k.is_zero(e)) r.c.push_back(std::move(e));
    return r;
}

template <valued_field F>
poly<F> poly_one(const F& k) {
    return poly_constant(k, k.one());
}

template <valued_field F>
poly<F> poly_x(const F& k) {
    poly<F> r;
    r.c = {k.zero(), k.one()};
    return r;
}

template <valued_field F>
poly<F> poly_monomial(const F& k, typename F::elem e, long n) {
    poly<F> r;
    if (k.is_zero(e)) return r;
    r.c.assign(n + 1, k.zero());
    r.c[n] = std::move(e);
    return r;
}

template <valued_field F>
bool poly_is_zero(const F&, const poly<F>& a) {
    return a.c.empty();
}

template <valued_field F>
std::optional<long> poly_degree(const F&, const poly<F>& a) {
    if (a.c.empty()) return std::nullopt;
    return static_cast<long>(a.c.size()) - 1;
}

namespace detail {

// Internal degree with -1 for zero; public code sees the optional form.
template <valued_field F>
long ideg(const poly<F>& a) {
    return static_cast<long>(a.c.size()) - 1;
}

}  // namespace detail

template <valued_field F>
const typename F::elem& poly_lc(const F&, const poly<F>& a) {
    if (a.c.empty()) throw zero_polynomial("leading coefficient requested");
    return a.c.back();
}

template <valued_field F>
bool poly_eq(const F& k, const poly<F>& a, const poly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!k.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <valued_field F>
poly<F> poly_add(const F& k, const poly<F>& a, const poly<F>& b) {
    poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c[i] = k.add(a.c[i], b.c[i]);
        else if (i < a.c.size())
            r.c[i] = a.c[i];
        else
            r.c[i] = b.c[i];
    }
    poly_trim(k, r);
    return r;
}

template <valued_field F>
poly<F> poly_neg(const F& k, const poly<F>& a) {
    poly<F> r = a;
    for (auto& e : r.c) e = k.neg(e);
    return r;
}

template <valued_field F>
poly<F> poly_sub(const F& k, const poly<F>& a, const poly<F>& b) {
    return poly_add(k, a, poly_neg(k, b));
}

template <valued_field F>
poly<F> poly_mul(const F& k, const poly<F>& a, const poly<F>& b) {
    if (a.c.empty() || b.c.empty()) return {};
    poly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (k.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
    }
    poly_trim(k, r);
    return r;
}

template <valued_field F>
poly<F> poly_scale(const F& k, const poly<F>& a, const typename F::elem& s) {
    if (k.is_zero(s)) return {};
    poly<F> r = a;
    for (auto& e : r.c) e = k.mul(e, s);
    return r;
}

template <valued_field F>
std::pair<poly<F>, poly<F>> poly_divmod(const F& k, const poly<F>& a, const poly<F>& b) {
    if (b.c.empty()) throw zero_polynomial("division by the zero polynomial");
    poly<F> rem = a, quo;
    long db = detail::ideg(b);
    auto lcinv = k.inv(b.c.back());
    if (detail::ideg(rem) >= db) quo.c.assign(detail::ideg(rem) - db + 1, k.zero());
    while (detail::ideg(rem) >= db) {
        long sh = detail::ideg(rem) - db;
        auto q = k.mul(rem.c.back(), lcinv);
        quo.c[sh] = q;
        for (long i = 0; i <= db; ++i)
            rem.c[sh + i] = k.sub(rem.c[sh + i], k.mul(q, b.c[i]));
        poly_trim(k, rem);
    }
    poly_trim(k, quo);
    return {quo, rem};
}

template <valued_field F>
poly<F> poly_div(const F& k, const poly<F>& a, const poly<F>& b) {
    return poly_divmod(k, a, b).first;
}

template <valued_field F>
poly<F> poly_mod(const F& k, const poly<F>& a, const poly<F>& b) {
    return poly_divmod(k, a, b).second;
}

template <valued_field F>
poly<F> poly_monic(const F& k, const poly<F>& a) {
    if (a.c.empty()) return a;
    return poly_scale(k, a, k.inv(a.c.back()));
}

template <valued_field F>
poly<F> poly_gcd(const F& k, poly<F> a, poly<F> b) {
    while (!b.c.empty()) {
        poly<F> r = poly_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(k, a);
}

template <valued_field F>
struct poly_xgcd_result {
    poly<F> g, u, v;  // u*a + v*b = g, g monic (or zero)
};

template <valued_field F>
poly_xgcd_result<F> poly_xgcd(const F& k, poly<F> a, poly<F> b) {
    poly<F> u0 = poly_one(k), v0, u1, v1 = poly_one(k);
    while (!b.c.empty()) {
        auto [q, r] = poly_divmod(k, a, b);
        poly<F> nu = poly_sub(k, u0, poly_mul(k, q, u1));
        poly<F> nv = poly_sub(k, v0, poly_mul(k, q, v1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(nu);
        v0 = std::move(v1);
        v1 = std::move(nv);
    }
    if (!a.c.empty()) {
        auto s = k.inv(a.c.back());
        a = poly_scale(k, a, s);
        u0 = poly_scale(k, u0, s);
        v0 = poly_scale(k, v0, s);
    }
    return {std::move(a), std::move(u0), std::move(v0)};
}

template <valued_field F>
typename F::elem poly_eval(const F& k, const poly<F>& a, const typename F::elem& x) {
    auto r = k.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) r = k.add(k.mul(r, x), a.c[i]);
    return r;
}

template <valued_field F>
poly<F> poly_derivative(const F& k, const poly<F>& a) {
    poly<F> r;
    if (a.c.size() <= 1) return r;
    r.c.reserve(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(k.mul(k.from_int(static_cast<long>(i)), a.c[i]));
    poly_trim(k, r);
    return r;
}

template <valued_field F>
poly<F> poly_pow(const F& k, poly<F> base, long n) {
    poly<F> r = poly_one(k);
    while (n > 0) {
        if (n & 1) r = poly_mul(k, r, base);
        base = poly_mul(k, base, base);
        n >>= 1;
    }
    return r;
}

// Resultant by the Euclidean recurrence
//   res(A, B) = (-1)^(deg A * deg B) * lc(B)^(deg A - deg R) * res(B, R)
// with R = A mod B, anchored at res(A, const c) = c^deg A.
template <valued_field F>
typename F::elem poly_resultant(const F& k, poly<F> a, poly<F> b) {
    if (a.c.empty() || b.c.empty()) return k.zero();
    auto elem_pow = [&](typename F::elem base, long n) {
        auto r = k.one();
        while (n > 0) {
            if (n & 1) r = k.mul(r, base);
            base = k.mul(base, base);
            n >>= 1;
        }
        return r;
    };
    auto acc = k.one();
    bool negate = false;
    while (true) {
        long da = detail::ideg(a);
        long db = detail::ideg(b);
        if (db == 0) return k.mul(acc, k.mul(negate ? k.neg(k.one()) : k.one(),
                                             elem_pow(b.c[0], da)));
        if (da < db) {
            std::swap(a, b);
            if ((da & 1) && (db & 1)) negate = !negate;
            continue;
        }
        poly<F> r = poly_mod(k, a, b);
        if (r.c.empty()) return k.zero();
        long dr = detail::ideg(r);
        if ((da & 1) && (db & 1)) negate = !negate;
        acc = k.mul(acc, elem_pow(b.c.back(), da - dr));
        a = std::move(b);
        b = std::move(r);
    }
}

// Coefficientwise chi-th root: each coefficient is replaced by its chi-th
// root, exponents untouched.  This is the coefficient-field homomorphism
// induced by the inverse Frobenius; in characteristic zero it is the
// identity.  Raises not_a_chi_power naming the offending exponent.
template <valued_field F>
poly<F> poly_coeff_chi_root(const F& k, const poly<F>& a) {
    poly<F> r;
    r.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        auto root = k.chi_root(a.c[i]);
        if (!root)
            throw not_a_chi_power(i, "coefficient has no chi-th root in the field");
        r.c.push_back(std::move(*root));
    }
    poly_trim(k, r);
    return r;
}

namespace detail {

// Full chi-th root of a polynomial that is a chi-th power: exponents divide
// by chi and coefficients take chi-th roots.  Used by squarefree splitting
// in positive characteristic, where a vanishing derivative means the
// polynomial is (a chi-th power) in x^chi.
template <valued_field F>
poly<F> poly_chi_root_full(const F& k, const poly<F>& a) {
    unsigned chi = k.chi();
    poly<F> r;
    if (a.c.empty()) return r;
    r.c.assign((a.c.size() - 1) / chi + 1, k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (k.is_zero(a.c[i])) continue;
        if (i % chi != 0)
            throw not_a_chi_power(i, "exponent is not a multiple of chi");
        auto root = k.chi_root(a.c[i]);
        if (!root)
            throw not_a_chi_power(i, "coefficient has no chi-th root in the field");
        r.c[i / chi] = std::move(*root);
    }
    poly_trim(k, r);
    return r;
}

}  // namespace detail

template <valued_field F>
struct sqfree_factor {
    poly<F> factor;  // monic, squarefree, pairwise coprime across entries
    long multiplicity;
};

// Squarefree factorization over the field: the input equals its leading
// coefficient times the product of factor^multiplicity.  Characteristic zero
// uses Yun's method; positive characteristic peels multiplicities coprime to
// chi and recurses through an exact chi-th root for the rest, raising
// not_a_chi_power when a coefficient root does not exist in the field.
template <valued_field F>
std::vector<sqfree_factor<F>> squarefree_factorization(const F& k, const poly<F>& a) {
    if (a.c.empty()) throw zero_polynomial("squarefree factorization");
    std::vector<sqfree_factor<F>> out;
    poly<F> m = poly_monic(k, a);
    if (detail::ideg(m) == 0) return out;

    if (k.characteristic() == 0) {
        poly<F> d = poly_derivative(k, m);
        poly<F> g = poly_gcd(k, m, d);
        poly<F> b = poly_div(k, m, g);
        poly<F> c = poly_div(k, d, g);
        poly<F> z = poly_sub(k, c, poly_derivative(k, b));
        long i = 1;
        while (detail::ideg(b) > 0) {
            poly<F> h = poly_gcd(k, b, z);
            if (detail::ideg(h) > 0) out.push_back({h, i});
            b = poly_div(k, b, h);
            c = poly_div(k, z, h);
            z = poly_sub(k, c, poly_derivative(k, b));
            ++i;
        }
        return out;
    }

    long chi = static_cast<long>(k.chi());
    poly<F> d = poly_derivative(k, m);
    poly<F> c = poly_gcd(k, m, d);  // gcd with zero derivative gives m itself
    poly<F> w = poly_div(k, m, c);
    long i = 1;
    while (detail::ideg(w) > 0) {
        poly<F> y = poly_gcd(k, w, c);
        poly<F> fac = poly_div(k, w, y);
        if (detail::ideg(fac) > 0) out.push_back({fac, i});
        w = std::move(y);
        c = poly_div(k, c, w);
        ++i;
    }
    if (detail::ideg(c) > 0) {
        poly<F> root = detail::poly_chi_root_full(k, c);
        for (auto& f : squarefree_factorization(k, root))
            out.push_back({std::move(f.factor), f.multiplicity * chi});
    }
    return out;
}

// Number of distinct zeros in an algebraic closure, counted through the
// squarefree factorization so multiplicities divisible by the characteristic
// are not lost.  Constants have none; the zero polynomial is rejected.
template <valued_field F>
long distinct_zero_count(const F& k, const poly<F>& a) {
    if (a.c.empty()) throw zero_polynomial("distinct zero count");
    long n = 0;
    for (const auto& f : squarefree_factorization(k, a)) n += detail::ideg(f.factor);
    return n;
}

template <valued_field F>
poly<F> poly_squarefree_part(const F& k, const poly<F>& a) {
    poly<F> r = poly_one(k);
    for (const auto& f : squarefree_factorization(k, a)) r = poly_mul(k, r, f.factor);
    return r;
}

template <valued_field F>
std::string poly_to_string(const F& k, const poly<F>& a, const std::string& var = "x") {
    if (a.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (k.is_zero(a.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = k.eq(a.c[i], k.one());
        if (i == 0 || !unit) os << "(" << k.to_string(a.c[i]) << ")";
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace ultranev

#endif  // ULTRANEV_POLY_HPP
