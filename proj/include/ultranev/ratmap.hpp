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

#ifndef ULTRANEV_RATMAP_HPP
#define ULTRANEV_RATMAP_HPP

#include <algorithm>
#include <string>
#include <utility>

#include "poly.hpp"

namespace ultranev {

// Rational map P = num/den in reduced form: gcd(num, den) constant and den
// monic.  The zero map is 0/1.
template <valued_field F>
struct ratmap {
    poly<F> num;
    poly<F> den;
};

template <valued_field F>
ratmap<F> ratmap_make(const F& k, poly<F> num, poly<F> den) {
    if (den.c.empty()) throw zero_denominator("rational map denominator");
    if (num.c.empty()) return {poly_zero(k), poly_one(k)};
    poly<F> g = poly_gcd(k, num, den);
    if (detail::ideg(g) > 0) {
        num = poly_div(k, num, g);
        den = poly_div(k, den, g);
    }
    auto s = k.inv(den.c.back());
    return {poly_scale(k, num, s), poly_scale(k, den, s)};
}

template <valued_field F>
ratmap<F> ratmap_from_poly(const F& k, poly<F> num) {
    return {std::move(num), poly_one(k)};
}

template <valued_field F>
bool ratmap_is_zero(const F&, const ratmap<F>& a) {
    return a.num.c.empty();
}

template <valued_field F>
bool ratmap_eq(const F& k, const ratmap<F>& a, const ratmap<F>& b) {
    return poly_eq(k, a.num, b.num) && poly_eq(k, a.den, b.den);
}

// max(deg num, deg den); the degree of the induced map on the projective
// line when reduced.  Zero map rejected.
template <valued_field F>
long ratmap_degree(const F& k, const ratmap<F>& a) {
    if (a.num.c.empty()) throw zero_polynomial("degree of the zero map");
    return std::max(*poly_degree(k, a.num), *poly_degree(k, a.den));
}

template <valued_field F>
typename F::elem ratmap_eval(const F& k, const ratmap<F>& a, const typename F::elem& x) {
    auto d = poly_eval(k, a.den, x);
    if (k.is_zero(d)) throw pole_at_point(k.to_string(x));
    return k.div(poly_eval(k, a.num, x), d);
}

template <valued_field F>
ratmap<F> ratmap_add(const F& k, const ratmap<F>& a, const ratmap<F>& b) {
    return ratmap_make(k,
                       poly_add(k, poly_mul(k, a.num, b.den), poly_mul(k, b.num, a.den)),
                       poly_mul(k, a.den, b.den));
}

template <valued_field F>
ratmap<F> ratmap_neg(const F& k, const ratmap<F>& a) {
    return {poly_neg(k, a.num), a.den};
}

template <valued_field F>
ratmap<F> ratmap_sub(const F& k, const ratmap<F>& a, const ratmap<F>& b) {
    return ratmap_add(k, a, ratmap_neg(k, b));
}

template <valued_field F>
ratmap<F> ratmap_mul(const F& k, const ratmap<F>& a, const ratmap<F>& b) {
    return ratmap_make(k, poly_mul(k, a.num, b.num), poly_mul(k, a.den, b.den));
}

template <valued_field F>
ratmap<F> ratmap_div(const F& k, const ratmap<F>& a, const ratmap<F>& b) {
    if (b.num.c.empty()) throw zero_denominator("division by the zero map");
    return ratmap_make(k, poly_mul(k, a.num, b.den), poly_mul(k, a.den, b.num));
}

template <valued_field F>
ratmap<F> ratmap_sub_const(const F& k, const ratmap<F>& a, const typename F::elem& c) {
    return ratmap_make(k, poly_sub(k, a.num, poly_scale(k, a.den, c)), a.den);
}

// (num' den - num den') / den^2, reduced.
template <valued_field F>
ratmap<F> ratmap_derivative(const F& k, const ratmap<F>& a) {
    poly<F> n = poly_sub(k, poly_mul(k, poly_derivative(k, a.num), a.den),
                         poly_mul(k, a.num, poly_derivative(k, a.den)));
    return ratmap_make(k, std::move(n), poly_mul(k, a.den, a.den));
}

template <valued_field F>
std::string ratmap_to_string(const F& k, const ratmap<F>& a, const std::string& var = "x") {
    std::string n = poly_to_string(k, a.num, var);
    if (detail::ideg(a.den) == 0 && k.eq(a.den.c[0], k.one())) return n;
    return "(" + n + ") / (" + poly_to_string(k, a.den, var) + ")";
}

}  // namespace ultranev

#endif  // ULTRANEV_RATMAP_HPP
