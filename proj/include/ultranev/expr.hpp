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

#ifndef ULTRANEV_EXPR_HPP
#define ULTRANEV_EXPR_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mero.hpp"
#include "ratmap.hpp"
#include "series.hpp"

namespace ultranev {

// Text input for the CLI and fixtures.  Three small languages share one
// lexer:
//   expressions   rational maps in x: rationals a/b, the declared generator
//                 symbol, x, parentheses and + - * / ^ (integer exponents)
//   series        [c0, c1, ...] @ order, coefficients in the expression
//                 grammar without x; a trailing ", ..." marks the tail as
//                 unknown beyond the listed coefficients
//   divisors      whitespace-separated entries zero@u xM / pole@u xM plus
//                 an optional origin xM, with u a rational log-radius

namespace detail {

struct ptoken {
    enum class kind { end, number, ident, punct };
    kind k = kind::end;
    std::size_t pos = 0;
    bigint value = 0;
    std::string text;
};

inline std::vector<ptoken> lex_expression(std::string_view text) {
    std::vector<ptoken> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto is_word = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    };
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        ptoken t;
        t.pos = i;
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < n && is_digit(text[j])) ++j;
            t.k = ptoken::kind::number;
            t.value = bigint(std::string(text.substr(i, j - i)));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && is_word(text[j])) ++j;
            t.k = ptoken::kind::ident;
            t.text = std::string(text.substr(i, j - i));
            i = j;
        } else if (c == '.') {
            if (text.substr(i, 3) != "...")
                throw parse_error(i, "decimals are not part of the grammar; use a/b");
            t.k = ptoken::kind::punct;
            t.text = "...";
            i += 3;
        } else if (std::string_view("()+-*/^[],@").find(c) != std::string_view::npos) {
            t.k = ptoken::kind::punct;
            t.text = std::string(1, c);
            ++i;
        } else {
            throw parse_error(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    ptoken end;
    end.pos = n;
    out.push_back(std::move(end));
    return out;
}

template <valued_field F>
ratmap<F> ratmap_int_pow(const F& k, ratmap<F> base, long e) {
    const bool invert = e < 0;
    if (invert) e = -e;
    auto r = ratmap_make(k, poly_one(k), poly_one(k));
    while (e > 0) {
        if (e & 1) r = ratmap_mul(k, r, base);
        base = ratmap_mul(k, base, base);
        e >>= 1;
    }
    return invert ? ratmap_div(k, ratmap_make(k, poly_one(k), poly_one(k)), r) : r;
}

template <valued_field F>
class expr_parser {
  public:
    expr_parser(const F& k, std::string_view text, bool allow_x)
        : k_(k), toks_(lex_expression(text)), allow_x_(allow_x) {}

    ratmap<F> parse_map() {
        auto r = sum();
        expect_done();
        return r;
    }

    typename F::elem parse_scalar() {
        auto m = parse_map();
        return scalar_of(m);
    }

    trunc_series<F> parse_series_literal() {
        expect_punct("[");
        std::vector<typename F::elem> coeffs;
        bool open_tail = false;
        if (!at_punct("]")) {
            for (;;) {
                if (at_punct("...")) {
                    open_tail = true;
                    advance();
                    break;
                }
                coeffs.push_back(scalar_of(sum()));
                if (at_punct(",")) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect_punct("]");
        long order = static_cast<long>(coeffs.size());
        if (at_punct("@")) {
            advance();
            long declared = small_number("a truncation order");
            if (open_tail && declared != order)
                throw parse_error(cur().pos,
                                  "an open tail fixes the order at the coefficient count");
            if (declared < order)
                throw parse_error(cur().pos, "more coefficients than the declared order");
            order = declared;
        } else if (!open_tail) {
            fail("expected '@ order' after the coefficient list");
        }
        expect_done();
        return series_make(k_, std::move(coeffs), order, !open_tail);
    }

  private:
    const F& k_;
    std::vector<ptoken> toks_;
    std::size_t at_ = 0;
    bool allow_x_;

    const ptoken& cur() const { return toks_[at_]; }
    void advance() { ++at_; }
    bool at_punct(std::string_view s) const {
        return cur().k == ptoken::kind::punct && cur().text == s;
    }
    void expect_punct(std::string_view s) {
        if (!at_punct(s)) fail(std::string("expected '") + std::string(s) + "'");
        advance();
    }
    void expect_done() {
        if (cur().k != ptoken::kind::end) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(cur().pos, msg);
    }

    typename F::elem scalar_of(const ratmap<F>& m) {
        if (ideg(m.num) > 0 || ideg(m.den) > 0)
            fail("the variable x is not allowed in this position");
        return poly_is_zero(k_, m.num) ? k_.zero() : k_.div(m.num.c[0], m.den.c[0]);
    }

    long small_number(const char* what) {
        bool neg = false;
        if (at_punct("-")) {
            neg = true;
            advance();
        }
        if (cur().k != ptoken::kind::number) fail(std::string("expected ") + what);
        bigint v = cur().value;
        advance();
        if (v > 100000) fail(std::string(what) + " is unreasonably large");
        long r = static_cast<long>(v);
        return neg ? -r : r;
    }

    ratmap<F> sum() {
        auto r = product();
        for (;;) {
            if (at_punct("+")) {
                advance();
                r = ratmap_add(k_, r, product());
            } else if (at_punct("-")) {
                advance();
                r = ratmap_sub(k_, r, product());
            } else {
                return r;
            }
        }
    }

    ratmap<F> product() {
        auto r = unary();
        for (;;) {
            if (at_punct("*")) {
                advance();
                r = ratmap_mul(k_, r, unary());
            } else if (at_punct("/")) {
                advance();
                r = ratmap_div(k_, r, unary());
            } else {
                return r;
            }
        }
    }

    ratmap<F> unary() {
        if (at_punct("-")) {
            advance();
            return ratmap_neg(k_, unary());
        }
        if (at_punct("+")) {
            advance();
            return unary();
        }
        return power();
    }

    ratmap<F> power() {
        auto base = atom();
        if (!at_punct("^")) return base;
        advance();
        return ratmap_int_pow(k_, std::move(base), small_number("an integer exponent"));
    }

    ratmap<F> atom() {
        if (cur().k == ptoken::kind::number) {
            auto c = k_.from_rat(rat(cur().value));
            advance();
            return ratmap_make(k_, poly_constant(k_, c), poly_one(k_));
        }
        if (cur().k == ptoken::kind::ident) {
            const std::string name = cur().text;
            if (name == "x") {
                if (!allow_x_) fail("the variable x is not allowed in this position");
                advance();
                return ratmap_make(k_, poly_x(k_), poly_one(k_));
            }
            if (auto v = k_.symbol_value(name)) {
                advance();
                return ratmap_make(k_, poly_constant(k_, *v), poly_one(k_));
            }
            fail("unknown symbol '" + name + "' in the declared field");
        }
        if (at_punct("(")) {
            advance();
            auto r = sum();
            expect_punct(")");
            return r;
        }
        fail("expected a number, symbol, or parenthesized expression");
    }
};

}  // namespace detail

template <valued_field F>
ratmap<F> parse_ratmap(const F& k, std::string_view text) {
    return detail::expr_parser<F>(k, text, true).parse_map();
}

template <valued_field F>
typename F::elem parse_element(const F& k, std::string_view text) {
    return detail::expr_parser<F>(k, text, false).parse_scalar();
}

template <valued_field F>
trunc_series<F> parse_series(const F& k, std::string_view text) {
    return detail::expr_parser<F>(k, text, false).parse_series_literal();
}

// Divisor entries in words: "zero@u xM", "pole@u xM", "origin xM" (signed M
// for a pole at the origin).  Entries end up sorted by log-radius with
// zeros ahead of poles at equal radius; the divisor is declared exact.
inline divisor parse_divisor(std::string_view text) {
    divisor d;
    d.bound.infinite = true;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto next_word = [&]() -> std::optional<std::pair<std::string, std::size_t>> {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= n) return std::nullopt;
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        return std::make_pair(std::string(text.substr(start, i - start)), start);
    };
    auto parse_mult = [&](const std::string& w, std::size_t pos, bool allow_sign) -> long {
        if (w.size() < 2 || w[0] != 'x')
            throw parse_error(pos, "expected a multiplicity like x2");
        std::size_t j = 1;
        bool neg = false;
        if (allow_sign && (w[j] == '-' || w[j] == '+')) {
            neg = (w[j] == '-');
            ++j;
        }
        if (j >= w.size() ||
            !std::all_of(w.begin() + static_cast<long>(j), w.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c)) != 0;
            }))
            throw parse_error(pos, "expected a multiplicity like x2");
        long m = std::stol(w.substr(j));
        if (m == 0) throw parse_error(pos, "multiplicity must be nonzero");
        return neg ? -m : m;
    };
    while (auto w = next_word()) {
        const auto& [word, pos] = *w;
        if (word == "origin") {
            auto m = next_word();
            if (!m) throw parse_error(pos, "origin entry needs a multiplicity");
            d.origin += parse_mult(m->first, m->second, true);
            continue;
        }
        auto at = word.find('@');
        if (at == std::string::npos)
            throw parse_error(pos, "entries look like zero@u xM or pole@u xM");
        std::string kind = word.substr(0, at);
        if (kind != "zero" && kind != "pole")
            throw parse_error(pos, "entry kind must be zero, pole, or origin");
        rat u;
        try {
            u = rat_from_string(word.substr(at + 1));
        } catch (const parse_error&) {
            throw parse_error(pos + at + 1, "expected a rational log-radius after '@'");
        }
        auto m = next_word();
        if (!m) throw parse_error(pos, "entry needs a multiplicity like x2");
        long mult = parse_mult(m->first, m->second, false);
        d.entries.push_back({u, kind == "zero" ? mult : -mult, 1});
    }
    std::stable_sort(d.entries.begin(), d.entries.end(),
                     [](const divisor_entry& a, const divisor_entry& b) {
                         if (a.u != b.u) return a.u < b.u;
                         return a.mult > 0 && b.mult < 0;
                     });
    return d;
}

}  // namespace ultranev

#endif  // ULTRANEV_EXPR_HPP
