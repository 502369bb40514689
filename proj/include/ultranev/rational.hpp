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

#ifndef ULTRANEV_RATIONAL_HPP
#define ULTRANEV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <string>

#include "errors.hpp"

namespace ultranev {

// All scalar quantities (log-radii, slopes, valuations, coefficients of the
// base field) are exact arbitrary-precision rationals.  Canonical form
// (positive denominator, reduced) is maintained by the backend.
using bigint = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

inline std::string bigint_to_string(const bigint& n) { return n.str(); }

// "a" for integers, "a/b" otherwise; denominators are always positive.
inline std::string rat_to_string(const rat& x) {
    bigint n = numerator(x), d = denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// Accepts optional sign, digits, and an optional "/digits" part.
inline rat rat_from_string(const std::string& s) {
    std::size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    std::size_t start = i;
    bool neg = false;
    if (i < n && (s[i] == '-' || s[i] == '+')) { neg = (s[i] == '-'); ++i; }
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw parse_error(start, "expected a rational number in \"" + s + "\"");
    bigint num(s.substr(num_begin, i - num_begin));
    bigint den = 1;
    skip_ws();
    if (i < n && s[i] == '/') {
        ++i;
        skip_ws();
        std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin) throw parse_error(i, "expected a denominator in \"" + s + "\"");
        den = bigint(s.substr(den_begin, i - den_begin));
        if (den == 0) throw parse_error(den_begin, "zero denominator in \"" + s + "\"");
    }
    skip_ws();
    if (i != n) throw parse_error(i, "trailing characters in rational \"" + s + "\"");
    rat r(num, den);
    return neg ? rat(-r) : r;
}

// Exact multiplicity of p in a nonzero integer.
inline long int_val(bigint v, const bigint& p) {
    long e = 0;
    while (v % p == 0) { v /= p; ++e; }
    return e;
}

// p-adic valuation; the zero element has infinite valuation, reported as nullopt.
inline std::optional<rat> rat_val(const rat& x, const bigint& p) {
    if (x == 0) return std::nullopt;
    return rat(int_val(numerator(x), p) - int_val(denominator(x), p));
}

inline std::optional<bigint> int_sqrt_exact(const bigint& v) {
    if (v < 0) return std::nullopt;
    bigint r = sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

// Exact rational square root, when one exists.
inline std::optional<rat> rat_sqrt_exact(const rat& x) {
    if (x < 0) return std::nullopt;
    auto n = int_sqrt_exact(numerator(x));
    if (!n) return std::nullopt;
    auto d = int_sqrt_exact(denominator(x));
    if (!d) return std::nullopt;
    return rat(*n, *d);
}

inline rat rat_pow(const rat& x, long e) {
    if (e < 0) {
        if (x == 0) throw zero_denominator("negative power of zero");
        return rat(1) / rat_pow(x, -e);
    }
    rat r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bigint rat_floor(const rat& x) {
    bigint n = numerator(x), d = denominator(x);
    bigint q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline const rat& rat_min(const rat& a, const rat& b) { return a < b ? a : b; }
inline const rat& rat_max(const rat& a, const rat& b) { return a < b ? b : a; }

}  // namespace ultranev

#endif  // ULTRANEV_RATIONAL_HPP
