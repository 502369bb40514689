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

#ifndef ULTRANEV_FIELDS_HPP
#define ULTRANEV_FIELDS_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "convex.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace ultranev {

// A valued field context.  Contexts are passed explicitly to every operation
// (no global state); element types are plain value types owned by the caller.
//
// valuation() returns the exact valuation of a nonzero element and nullopt
// for zero.  chi() is the characteristic exponent: the characteristic when it
// is positive, otherwise 1.  chi_root() extracts a chi-th root when one
// exists in the field (the identity map in characteristic zero).
// symbol_value() resolves named constants the field exposes to parsers, such
// as the generator of an extension.
template <typename F>
concept valued_field = requires(const F k, const typename F::elem& a,
                                const typename F::elem& b, const std::string& name,
                                const rat& q, long n) {
    typename F::elem;
    { k.characteristic() } -> std::convertible_to<unsigned>;
    { k.chi() } -> std::convertible_to<unsigned>;
    { k.zero() } -> std::same_as<typename F::elem>;
    { k.one() } -> std::same_as<typename F::elem>;
    { k.from_int(n) } -> std::same_as<typename F::elem>;
    { k.from_rat(q) } -> std::same_as<typename F::elem>;
    { k.is_zero(a) } -> std::convertible_to<bool>;
    { k.eq(a, b) } -> std::convertible_to<bool>;
    { k.add(a, b) } -> std::same_as<typename F::elem>;
    { k.sub(a, b) } -> std::same_as<typename F::elem>;
    { k.mul(a, b) } -> std::same_as<typename F::elem>;
    { k.div(a, b) } -> std::same_as<typename F::elem>;
    { k.neg(a) } -> std::same_as<typename F::elem>;
    { k.inv(a) } -> std::same_as<typename F::elem>;
    { k.valuation(a) } -> std::same_as<std::optional<rat>>;
    { k.sqrt(a) } -> std::same_as<std::optional<typename F::elem>>;
    { k.chi_root(a) } -> std::same_as<std::optional<typename F::elem>>;
    { k.symbol_value(name) } -> std::same_as<std::optional<typename F::elem>>;
    { k.to_string(a) } -> std::same_as<std::string>;
};

// ---------------------------------------------------------------------------
// The rationals with the p-adic valuation.
// ---------------------------------------------------------------------------

class padic_rationals {
  public:
    using elem = rat;

    explicit padic_rationals(bigint p) : p_(std::move(p)) {
        if (p_ < 2) throw field_error("p must be a prime >= 2");
    }

    const bigint& p() const { return p_; }

    unsigned characteristic() const { return 0; }
    unsigned chi() const { return 1; }

    elem zero() const { return rat(0); }
    elem one() const { return rat(1); }
    elem from_int(long n) const { return rat(n); }
    elem from_rat(const rat& q) const { return q; }

    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    elem div(const elem& a, const elem& b) const {
        if (b == 0) throw zero_denominator("division by zero in the rationals");
        return a / b;
    }
    elem inv(const elem& a) const { return div(one(), a); }

    std::optional<rat> valuation(const elem& a) const { return rat_val(a, p_); }

    std::optional<elem> sqrt(const elem& a) const { return rat_sqrt_exact(a); }
    std::optional<elem> chi_root(const elem& a) const { return a; }

    std::optional<elem> symbol_value(const std::string&) const { return std::nullopt; }

    std::string to_string(const elem& a) const { return rat_to_string(a); }

  private:
    bigint p_;
};

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over a small prime field, used both by the
// T-adic function field below and by residue computations in extensions.
// ---------------------------------------------------------------------------

namespace detail {

inline unsigned fp_norm(long v, unsigned pi) {
    long m = v % static_cast<long>(pi);
    if (m < 0) m += pi;
    return static_cast<unsigned>(m);
}

inline unsigned fp_add(unsigned a, unsigned b, unsigned pi) { return (a + b) % pi; }
inline unsigned fp_sub(unsigned a, unsigned b, unsigned pi) { return (a + pi - b) % pi; }
inline unsigned fp_mul(unsigned a, unsigned b, unsigned pi) {
    return static_cast<unsigned>((static_cast<unsigned long long>(a) * b) % pi);
}

inline unsigned fp_pow(unsigned a, unsigned long e, unsigned pi) {
    unsigned r = 1 % pi;
    unsigned base = a % pi;
    while (e) {
        if (e & 1) r = fp_mul(r, base, pi);
        base = fp_mul(base, base, pi);
        e >>= 1;
    }
    return r;
}

inline unsigned fp_inv(unsigned a, unsigned pi) {
    if (a % pi == 0) throw zero_denominator("inverse of zero in the prime field");
    return fp_pow(a, pi - 2, pi);
}

inline std::optional<unsigned> fp_sqrt(unsigned a, unsigned pi) {
    a %= pi;
    // Brute force; pi is small by construction.
    for (unsigned r = 0; r <= pi / 2; ++r)
        if (fp_mul(r, r, pi) == a) return r;
    return std::nullopt;
}

// Coefficients in [0, pi), index = exponent, trailing zeros trimmed.
struct fp_poly {
    std::vector<unsigned> c;
    bool operator==(const fp_poly&) const = default;
};

inline void fpp_trim(fp_poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline bool fpp_is_zero(const fp_poly& a) { return a.c.empty(); }

inline long fpp_deg(const fp_poly& a) { return static_cast<long>(a.c.size()) - 1; }

inline fp_poly fpp_const(unsigned v, unsigned pi) {
    fp_poly r;
    if (v % pi != 0) r.c.push_back(v % pi);
    return r;
}

inline fp_poly fpp_add(const fp_poly& a, const fp_poly& b, unsigned pi) {
    fp_poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        unsigned x = i < a.c.size() ? a.c[i] : 0;
        unsigned y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = fp_add(x, y, pi);
    }
    fpp_trim(r);
    return r;
}

inline fp_poly fpp_sub(const fp_poly& a, const fp_poly& b, unsigned pi) {
    fp_poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        unsigned x = i < a.c.size() ? a.c[i] : 0;
        unsigned y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = fp_sub(x, y, pi);
    }
    fpp_trim(r);
    return r;
}

inline fp_poly fpp_mul(const fp_poly& a, const fp_poly& b, unsigned pi) {
    if (fpp_is_zero(a) || fpp_is_zero(b)) return {};
    fp_poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = fp_add(r.c[i + j], fp_mul(a.c[i], b.c[j], pi), pi);
    }
    fpp_trim(r);
    return r;
}

inline fp_poly fpp_scale(const fp_poly& a, unsigned s, unsigned pi) {
    fp_poly r = a;
    for (auto& v : r.c) v = fp_mul(v, s, pi);
    fpp_trim(r);
    return r;
}

inline std::pair<fp_poly, fp_poly> fpp_divmod(const fp_poly& a, const fp_poly& b,
                                              unsigned pi) {
    if (fpp_is_zero(b)) throw zero_denominator("polynomial division by zero");
    fp_poly rem = a, quo;
    long db = fpp_deg(b);
    unsigned lcinv = fp_inv(b.c.back(), pi);
    if (fpp_deg(rem) >= db) quo.c.assign(fpp_deg(rem) - db + 1, 0);
    while (fpp_deg(rem) >= db) {
        long k = fpp_deg(rem) - db;
        unsigned q = fp_mul(rem.c.back(), lcinv, pi);
        quo.c[k] = q;
        for (long i = 0; i <= db; ++i)
            rem.c[k + i] = fp_sub(rem.c[k + i], fp_mul(q, b.c[i], pi), pi);
        fpp_trim(rem);
    }
    fpp_trim(quo);
    return {quo, rem};
}

inline fp_poly fpp_monic(const fp_poly& a, unsigned pi) {
    if (fpp_is_zero(a)) return a;
    return fpp_scale(a, fp_inv(a.c.back(), pi), pi);
}

inline fp_poly fpp_gcd(fp_poly a, fp_poly b, unsigned pi) {
    while (!fpp_is_zero(b)) {
        fp_poly r = fpp_divmod(a, b, pi).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fpp_monic(a, pi);
}

inline long fpp_ord(const fp_poly& a) {
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != 0) return static_cast<long>(i);
    return -1;
}

inline unsigned fpp_eval(const fp_poly& a, unsigned x, unsigned pi) {
    unsigned r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = fp_add(fp_mul(r, x, pi), a.c[i], pi);
    return r;
}

// Exact polynomial square root, or nullopt.  In characteristic 2 a square
// has even exponents only (coefficientwise Frobenius is the identity on
// the prime field); otherwise solve top-down and verify.
inline std::optional<fp_poly> fpp_sqrt(const fp_poly& a, unsigned pi) {
    if (fpp_is_zero(a)) return fp_poly{};
    long d = fpp_deg(a);
    if (d % 2 != 0) return std::nullopt;
    long m = d / 2;
    fp_poly s;
    s.c.assign(m + 1, 0);
    if (pi == 2) {
        for (long i = 0; i <= d; ++i) {
            if (a.c[i] == 0) continue;
            if (i % 2 != 0) return std::nullopt;
            s.c[i / 2] = a.c[i];
        }
        if (fpp_mul(s, s, pi) == a) return s;
        return std::nullopt;
    }
    auto lead = fp_sqrt(a.c[d], pi);
    if (!lead) return std::nullopt;
    s.c[m] = *lead;
    unsigned denom = fp_inv(fp_mul(2 % pi, s.c[m], pi), pi);
    for (long j = m - 1; j >= 0; --j) {
        // Coefficient of x^(m+j) in s^2 is 2*s_m*s_j plus known cross terms.
        unsigned known = 0;
        for (long i = j + 1; i <= m - 1; ++i) {
            long k = m + j - i;
            if (k < i || k > m - 1) continue;
            unsigned t = fp_mul(s.c[i], s.c[k], pi);
            known = fp_add(known, k == i ? t : fp_mul(2 % pi, t, pi), pi);
        }
        s.c[j] = fp_mul(fp_sub(a.c[m + j], known, pi), denom, pi);
    }
    fpp_trim(s);
    if (fpp_mul(s, s, pi) == a) return s;
    return std::nullopt;
}

inline std::string fpp_to_string(const fp_poly& a, const std::string& var) {
    if (fpp_is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i > 0) {
            if (a.c[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline bool is_prime_small(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rational functions F_pi(T) with the T-adic valuation.  The residue field
// is the prime field F_pi, so the Frobenius x -> x^pi fixes every constant
// and chi-th roots of coefficients reduce to exponent bookkeeping.
// ---------------------------------------------------------------------------

struct fpt_elem {
    detail::fp_poly num;
    detail::fp_poly den;  // monic, nonzero, coprime to num
    bool operator==(const fpt_elem&) const = default;
};

class tadic_functions {
  public:
    using elem = fpt_elem;

    explicit tadic_functions(unsigned pi) : pi_(pi) {
        if (!detail::is_prime_small(pi) || pi > 65535)
            throw field_error("residue characteristic must be a small prime");
    }

    unsigned pi() const { return pi_; }
    unsigned characteristic() const { return pi_; }
    unsigned chi() const { return pi_; }

    elem zero() const { return make(detail::fp_poly{}, one_poly()); }
    elem one() const { return make(one_poly(), one_poly()); }

    elem from_int(long n) const {
        return make(detail::fpp_const(detail::fp_norm(n, pi_), pi_), one_poly());
    }

    elem from_rat(const rat& q) const {
        rat t = q;
        bigint num = boost::multiprecision::numerator(t);
        bigint den = boost::multiprecision::denominator(t);
        bigint pb(pi_);
        if (den % pb == 0)
            throw field_error("rational constant has no image in characteristic " +
                              std::to_string(pi_));
        unsigned n = static_cast<unsigned>(((num % pb) + pb) % pb);
        unsigned d = static_cast<unsigned>(den % pb);
        unsigned v = detail::fp_mul(n, detail::fp_inv(d, pi_), pi_);
        return make(detail::fpp_const(v, pi_), one_poly());
    }

    elem gen() const {
        detail::fp_poly t;
        t.c = {0, 1};
        return make(t, one_poly());
    }

    bool is_zero(const elem& a) const { return detail::fpp_is_zero(a.num); }
    bool eq(const elem& a, const elem& b) const { return a == b; }

    elem add(const elem& a, const elem& b) const {
        using namespace detail;
        return make(fpp_add(fpp_mul(a.num, b.den, pi_), fpp_mul(b.num, a.den, pi_), pi_),
                    fpp_mul(a.den, b.den, pi_));
    }
    elem sub(const elem& a, const elem& b) const { return add(a, neg(b)); }
    elem neg(const elem& a) const {
        return {detail::fpp_scale(a.num, pi_ - 1, pi_), a.den};
    }
    elem mul(const elem& a, const elem& b) const {
        using namespace detail;
        return make(fpp_mul(a.num, b.num, pi_), fpp_mul(a.den, b.den, pi_));
    }
    elem div(const elem& a, const elem& b) const {
        if (is_zero(b)) throw zero_denominator("division by zero rational function");
        using namespace detail;
        return make(fpp_mul(a.num, b.den, pi_), fpp_mul(a.den, b.num, pi_));
    }
    elem inv(const elem& a) const { return div(one(), a); }

    std::optional<rat> valuation(const elem& a) const {
        if (is_zero(a)) return std::nullopt;
        return rat(detail::fpp_ord(a.num) - detail::fpp_ord(a.den));
    }

    std::optional<elem> sqrt(const elem& a) const {
        auto n = detail::fpp_sqrt(a.num, pi_);
        auto d = detail::fpp_sqrt(a.den, pi_);
        if (!n || !d) return std::nullopt;
        return make(*n, *d);
    }

    // pi-th root: exists iff every exponent in num and den is divisible by
    // pi (constants are their own pi-th powers over the prime field).
    std::optional<elem> chi_root(const elem& a) const {
        auto root_part = [&](const detail::fp_poly& f) -> std::optional<detail::fp_poly> {
            detail::fp_poly r;
            if (detail::fpp_is_zero(f)) return r;
            r.c.assign(detail::fpp_deg(f) / pi_ + 1, 0);
            for (std::size_t i = 0; i < f.c.size(); ++i) {
                if (f.c[i] == 0) continue;
                if (i % pi_ != 0) return std::nullopt;
                r.c[i / pi_] = f.c[i];
            }
            return r;
        };
        auto n = root_part(a.num);
        auto d = root_part(a.den);
        if (!n || !d) return std::nullopt;
        return make(*n, *d);
    }

    std::optional<elem> symbol_value(const std::string& name) const {
        if (name == "T") return gen();
        return std::nullopt;
    }

    std::string to_string(const elem& a) const {
        std::string n = detail::fpp_to_string(a.num, "T");
        if (detail::fpp_deg(a.den) == 0 && a.den.c[0] == 1) return n;
        return "(" + n + ")/(" + detail::fpp_to_string(a.den, "T") + ")";
    }

  private:
    detail::fp_poly one_poly() const { return detail::fpp_const(1, pi_); }

    elem make(detail::fp_poly n, detail::fp_poly d) const {
        using namespace detail;
        if (fpp_is_zero(d)) throw zero_denominator("zero denominator polynomial");
        if (fpp_is_zero(n)) return {fp_poly{}, fpp_const(1, pi_)};
        fp_poly g = fpp_gcd(n, d, pi_);
        if (fpp_deg(g) > 0) {
            n = fpp_divmod(n, g, pi_).first;
            d = fpp_divmod(d, g, pi_).first;
        }
        unsigned s = fp_inv(d.c.back(), pi_);
        return {fpp_scale(n, s, pi_), fpp_scale(d, s, pi_)};
    }

    unsigned pi_;
};

// ---------------------------------------------------------------------------
// Rational polynomial helpers for extension arithmetic.
// ---------------------------------------------------------------------------

namespace detail {

using rpoly = std::vector<rat>;  // index = exponent, trailing zeros trimmed

inline void rp_trim(rpoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long rp_deg(const rpoly& a) { return static_cast<long>(a.size()) - 1; }

inline rpoly rp_mul(const rpoly& a, const rpoly& b) {
    if (a.empty() || b.empty()) return {};
    rpoly r(a.size() + b.size() - 1, rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rp_trim(r);
    return r;
}

inline std::pair<rpoly, rpoly> rp_divmod(const rpoly& a, const rpoly& b) {
    if (b.empty()) throw zero_denominator("rational polynomial division by zero");
    rpoly rem = a, quo;
    long db = rp_deg(b);
    if (rp_deg(rem) >= db) quo.assign(rp_deg(rem) - db + 1, rat(0));
    while (rp_deg(rem) >= db) {
        long k = rp_deg(rem) - db;
        rat q = rem.back() / b.back();
        quo[k] = q;
        for (long i = 0; i <= db; ++i) rem[k + i] -= q * b[i];
        rp_trim(rem);
    }
    rp_trim(quo);
    return {quo, rem};
}

// Extended Euclid over the rationals: returns (g, u, v) with u*a + v*b = g.
struct rp_xgcd_result {
    rpoly g, u, v;
};

inline rp_xgcd_result rp_xgcd(rpoly a, rpoly b) {
    rpoly u0{rat(1)}, v0, u1, v1{rat(1)};
    while (!b.empty()) {
        auto [q, r] = rp_divmod(a, b);
        rpoly qu = rp_mul(q, u1), qv = rp_mul(q, v1);
        rpoly nu(std::max(u0.size(), qu.size()), rat(0));
        for (std::size_t i = 0; i < nu.size(); ++i) {
            if (i < u0.size()) nu[i] += u0[i];
            if (i < qu.size()) nu[i] -= qu[i];
        }
        rp_trim(nu);
        rpoly nv(std::max(v0.size(), qv.size()), rat(0));
        for (std::size_t i = 0; i < nv.size(); ++i) {
            if (i < v0.size()) nv[i] += v0[i];
            if (i < qv.size()) nv[i] -= qv[i];
        }
        rp_trim(nv);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(nu);
        v0 = std::move(v1);
        v1 = std::move(nv);
    }
    return {a, u0, v0};
}

// Positive divisors of |n|, for rational root candidate enumeration.
// Refuses huge inputs rather than stalling on factoring.
inline std::vector<bigint> small_divisors(bigint n) {
    if (n < 0) n = -n;
    if (n == 0) throw field_error("divisor enumeration of zero");
    if (n > bigint(1000000000000LL))
        throw field_error("coefficient too large for rational root screening");
    std::vector<bigint> lo, hi;
    for (bigint d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d * d != n) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline rat rp_eval(const rpoly& a, const rat& x) {
    rat r(0);
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

// True if the polynomial has a rational root.  Used only to screen small
// minimal polynomials, so coefficient sizes are bounded.
inline bool rp_has_rational_root(const rpoly& a) {
    rpoly f = a;
    rp_trim(f);
    if (f.empty() || rp_deg(f) == 0) return false;
    if (f[0] == 0) return true;
    // Clear denominators to an integer polynomial.
    bigint scale = 1;
    for (const auto& c : f) {
        rat t = c;
        bigint d = boost::multiprecision::denominator(t);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    std::vector<bigint> ic(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        rat t = f[i] * scale;
        ic[i] = boost::multiprecision::numerator(t);
    }
    auto ps = small_divisors(ic[0]);
    auto qs = small_divisors(ic.back());
    for (const auto& pn : ps)
        for (const auto& qn : qs)
            for (int sg : {1, -1}) {
                rat cand = rat(pn * sg, qn);
                if (rp_eval(f, cand) == 0) return true;
            }
    return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// A simple extension Q(g) = Q[x]/(m(x)) of the p-adic rationals, with the
// generator's valuation declared up front.  Elements are coordinate vectors
// of fixed length deg(m) in the power basis 1, g, ..., g^(d-1).
//
// The declared valuation extends the p-adic one exactly only when candidate
// terms v_p(c_i) + i*val(g) can never tie at the minimum, or when ties are
// known to resolve to the minimum.  Construction classifies the extension:
//   - inert: val(g) = 0 and m stays irreducible over the residue field, so
//     a sum of distinct residue basis contributions cannot vanish and ties
//     resolve to the minimum;
//   - ramified: the values i*val(g) mod 1 are pairwise distinct for
//     0 <= i < d, so ties are impossible;
//   - ambiguous: anything else; valuations that tie raise an error instead
//     of guessing.
// ---------------------------------------------------------------------------

struct ext_elem {
    std::vector<rat> c;  // fixed length = extension degree
    bool operator==(const ext_elem&) const = default;
};

class simple_extension {
  public:
    using elem = ext_elem;

    enum class vclass { inert, ramified, ambiguous };

    simple_extension(bigint p, std::string gen_name, detail::rpoly minpoly, rat gen_val,
                     bool declared_irreducible = false)
        : p_(std::move(p)), gen_(std::move(gen_name)), m_(std::move(minpoly)),
          gen_val_(std::move(gen_val)) {
        if (p_ < 2) throw field_error("p must be a prime >= 2");
        detail::rp_trim(m_);
        long d = detail::rp_deg(m_);
        if (d < 2) throw field_error("minimal polynomial must have degree >= 2");
        if (m_.back() != 1) throw field_error("minimal polynomial must be monic");
        check_irreducible(declared_irreducible);
        check_gen_val();
        vclass_ = classify();
    }

    const bigint& p() const { return p_; }
    const std::string& gen_name() const { return gen_; }
    long degree() const { return detail::rp_deg(m_); }
    const detail::rpoly& minpoly() const { return m_; }
    const rat& gen_valuation() const { return gen_val_; }
    vclass valuation_class() const { return vclass_; }

    unsigned characteristic() const { return 0; }
    unsigned chi() const { return 1; }

    elem zero() const { return elem{std::vector<rat>(degree(), rat(0))}; }
    elem one() const { return from_rat(rat(1)); }
    elem from_int(long n) const { return from_rat(rat(n)); }
    elem from_rat(const rat& q) const {
        elem e = zero_raw();
        e.c[0] = q;
        return e;
    }
    elem gen() const {
        elem e = zero_raw();
        e.c[1] = 1;
        return e;
    }
    elem from_coords(std::vector<rat> c) const {
        detail::rpoly r = std::move(c);
        return reduce(std::move(r));
    }

    bool is_zero(const elem& a) const {
        return std::all_of(a.c.begin(), a.c.end(), [](const rat& x) { return x == 0; });
    }
    bool eq(const elem& a, const elem& b) const { return a.c == b.c; }

    elem add(const elem& a, const elem& b) const {
        elem r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    elem sub(const elem& a, const elem& b) const {
        elem r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    elem neg(const elem& a) const {
        elem r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    elem mul(const elem& a, const elem& b) const {
        return reduce(detail::rp_mul(trimmed(a), trimmed(b)));
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

    elem inv(const elem& a) const {
        if (is_zero(a)) throw zero_denominator("inverse of zero in the extension");
        auto r = detail::rp_xgcd(trimmed(a), m_);
        // gcd is a nonzero constant because m is irreducible and a != 0.
        if (detail::rp_deg(r.g) != 0)
            throw field_error("minimal polynomial is reducible");
        rat ginv = rat(1) / r.g[0];
        detail::rpoly u = r.u;
        for (auto& x : u) x *= ginv;
        return reduce(std::move(u));
    }

    // Exact valuation extending v_p with v(g) = gen_val.  Nonzero elements
    // whose candidate terms tie at the minimum are only resolvable in the
    // inert case; ambiguous extensions raise instead of returning a guess.
    std::optional<rat> valuation(const elem& a) const {
        std::optional<rat> best;
        int at_min = 0;
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            auto v = rat_val(a.c[i], p_);
            if (!v) continue;
            rat cand = *v + gen_val_ * static_cast<long>(i);
            if (!best || cand < *best) {
                best = cand;
                at_min = 1;
            } else if (cand == *best) {
                ++at_min;
            }
        }
        if (!best) return std::nullopt;
        if (at_min > 1) {
            if (vclass_ == vclass::inert) return best;
            if (vclass_ == vclass::ramified)
                throw field_error("tie in a tie-free ramified extension");
            throw ambiguous_valuation(
                "candidate valuations tie and the extension cannot certify the minimum");
        }
        return best;
    }

    // Square roots in the quadratic pure case x^2 - D: solve
    // (alpha + beta*g)^2 = u + v*g exactly.  Rational squares embed in any
    // degree; other shapes return nullopt rather than an unverified value.
    std::optional<elem> sqrt(const elem& a) const {
        bool rational = true;
        for (std::size_t i = 1; i < a.c.size(); ++i)
            if (a.c[i] != 0) rational = false;
        if (rational) {
            if (auto r = rat_sqrt_exact(a.c[0])) return from_rat(*r);
        }
        if (degree() != 2 || m_[1] != 0) return std::nullopt;
        rat D = -m_[0];
        const rat& u = a.c[0];
        const rat& v = a.c[1];
        if (v == 0) {
            // u = alpha^2 handled above; try u = D * beta^2.
            if (auto b2 = rat_sqrt_exact(u / D)) {
                elem e = zero_raw();
                e.c[1] = *b2;
                return e;
            }
            return std::nullopt;
        }
        rat n = u * u - D * v * v;
        auto s = rat_sqrt_exact(n);
        if (!s) return std::nullopt;
        for (int sg : {1, -1}) {
            rat A = (u + *s * sg) / 2;
            auto alpha = rat_sqrt_exact(A);
            if (!alpha || *alpha == 0) continue;
            elem e = zero_raw();
            e.c[0] = *alpha;
            e.c[1] = v / (2 * *alpha);
            if (eq(mul(e, e), a)) return e;
        }
        return std::nullopt;
    }

    std::optional<elem> chi_root(const elem& a) const { return a; }

    std::optional<elem> symbol_value(const std::string& name) const {
        if (name == gen_) return gen();
        return std::nullopt;
    }

    std::string to_string(const elem& a) const {
        if (is_zero(a)) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << rat_to_string(a.c[i]);
            } else {
                if (a.c[i] != 1) os << rat_to_string(a.c[i]) << "*";
                os << gen_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    elem zero_raw() const { return elem{std::vector<rat>(degree(), rat(0))}; }

    detail::rpoly trimmed(const elem& a) const {
        detail::rpoly r = a.c;
        detail::rp_trim(r);
        return r;
    }

    elem reduce(detail::rpoly r) const {
        detail::rp_trim(r);
        if (detail::rp_deg(r) >= degree()) r = detail::rp_divmod(r, m_).second;
        r.resize(degree(), rat(0));
        return elem{std::move(r)};
    }

    void check_irreducible(bool declared) const {
        long d = detail::rp_deg(m_);
        if (d == 2) {
            rat disc = m_[1] * m_[1] - 4 * m_[0];
            if (rat_sqrt_exact(disc))
                throw field_error("minimal polynomial splits over the rationals");
            return;
        }
        if (d == 3) {
            if (detail::rp_has_rational_root(m_))
                throw field_error("minimal polynomial has a rational root");
            return;
        }
        // Degree >= 4: full irreducibility testing is out of scope; require
        // the caller to vouch, but still reject an obvious linear factor.
        if (!declared)
            throw field_error("degree >= 4 minimal polynomial must be declared irreducible");
        if (detail::rp_has_rational_root(m_))
            throw field_error("minimal polynomial has a rational root");
    }

    // The declared generator valuation must be the negative of a slope of
    // the lower hull of (i, v_p(m_i)); otherwise no root of m has it.
    void check_gen_val() const {
        std::vector<hull_point> pts;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            auto v = rat_val(m_[i], p_);
            if (v) pts.push_back({static_cast<long>(i), *v});
        }
        auto slopes = hull_slopes(lower_hull(pts));
        for (const auto& s : slopes)
            if (-s.slope == gen_val_) return;
        throw field_error("declared generator valuation is not attained by any root");
    }

    vclass classify() const {
        long d = detail::rp_deg(m_);
        // Ramified: i * val(g) hits pairwise distinct classes mod 1 for
        // 0 <= i < d, i.e. k * val(g) is non-integral for 1 <= k <= d-1.
        if (gen_val_ != 0) {
            bool distinct = true;
            for (long k = 1; k < d && distinct; ++k) {
                rat t = gen_val_ * k;
                rat u = t;
                if (boost::multiprecision::denominator(u) == 1) distinct = false;
            }
            if (distinct) return vclass::ramified;
            return vclass::ambiguous;
        }
        // Inert candidate: p-integral coefficients and m irreducible over
        // the residue field.  Only small p is screened exhaustively.
        if (p_ > 100000 || d > 5) return vclass::ambiguous;
        unsigned pu = static_cast<unsigned>(p_);
        detail::fp_poly mbar;
        mbar.c.assign(d + 1, 0);
        for (std::size_t i = 0; i < m_.size(); ++i) {
            rat c = m_[i];
            bigint num = boost::multiprecision::numerator(c);
            bigint den = boost::multiprecision::denominator(c);
            if (den % p_ == 0) return vclass::ambiguous;  // not p-integral
            unsigned n = static_cast<unsigned>(((num % p_) + p_) % p_);
            unsigned dd = static_cast<unsigned>(den % p_);
            mbar.c[i] = detail::fp_mul(n, detail::fp_inv(dd, pu), pu);
        }
        detail::fpp_trim(mbar);
        if (detail::fpp_deg(mbar) != d) return vclass::ambiguous;
        // No linear factor.
        for (unsigned r = 0; r < pu; ++r)
            if (detail::fpp_eval(mbar, r, pu) == 0) return vclass::ambiguous;
        // No quadratic factor; enough to certify irreducibility for d <= 5.
        if (d >= 4) {
            for (unsigned b = 0; b < pu; ++b)
                for (unsigned c = 0; c < pu; ++c) {
                    detail::fp_poly q;
                    q.c = {c, b, 1};
                    if (detail::fpp_is_zero(detail::fpp_divmod(mbar, q, pu).second))
                        return vclass::ambiguous;
                }
        }
        return vclass::inert;
    }

    bigint p_;
    std::string gen_;
    detail::rpoly m_;
    rat gen_val_;
    vclass vclass_;
};

static_assert(valued_field<padic_rationals>);
static_assert(valued_field<tadic_functions>);
static_assert(valued_field<simple_extension>);

}  // namespace ultranev

#endif  // ULTRANEV_FIELDS_HPP
