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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ultranev/decomp.hpp"

using namespace ultranev;

namespace {

const padic_rationals Q5(5);

poly<padic_rationals> P(const std::vector<rat>& c) { return poly_from_rats(Q5, c); }

ratmap<padic_rationals> RM(const std::vector<rat>& n, const std::vector<rat>& d) {
    return ratmap_make(Q5, P(n), P(d));
}

// Numeric trace fields two runs of the engine must agree on.
void check_same_trace(const verdict& a, const verdict& b) {
    CHECK(a.ruled_out == b.ruled_out);
    CHECK(a.reason == b.reason);
    CHECK(a.trace.p == b.trace.p);
    CHECK(a.trace.q == b.trace.q);
    CHECK(a.trace.k == b.trace.k);
    CHECK(a.trace.s == b.trace.s);
    CHECK(a.trace.theta == b.trace.theta);
    CHECK(a.trace.lhs == b.trace.lhs);
    CHECK(a.trace.rhs == b.trace.rhs);
    CHECK(a.trace.relation == b.trace.relation);
    CHECK(a.trace.relation_holds == b.trace.relation_holds);
}

}  // namespace

TEST_CASE("five clause verification on a quadratic pair over a square-root extension",
          "[decomp]") {
    simple_extension K(5, "s", {rat(-3), rat(0), rat(1)}, rat(0));
    auto fr = [&](const rat& q) { return K.from_rat(q); };
    // source (s/2 - 1/3)x^2 + x - (s/2 + 1/3) over x^2 + 1
    auto a2 = K.from_coords({rat(-1, 3), rat(1, 2)});
    auto a0 = K.from_coords({rat(-1, 3), rat(-1, 2)});
    auto pm = ratmap_make(K, poly_from_coeffs(K, {a0, K.one(), a2}),
                          poly_from_coeffs(K, {K.one(), K.zero(), K.one()}));
    // target x^2 over x^2 + x + 1
    auto qm = ratmap_make(K, poly_monomial(K, K.one(), 2),
                          poly_from_coeffs(K, {K.one(), K.one(), K.one()}));

    auto rep = check_condition_m(K, pm, qm);
    REQUIRE(rep.satisfied == m_status::yes);
    CHECK(rep.k == 2);
    REQUIRE(rep.critical_points.roots.size() == 2);
    CHECK(K.eq(rep.critical_points.roots[0].first, K.from_coords({rat(2), rat(1)})));
    CHECK(K.eq(rep.critical_points.roots[1].first, K.from_coords({rat(-2), rat(1)})));
    REQUIRE(rep.critical_values.size() == 2);
    CHECK(K.eq(rep.critical_values[0], fr(rat(2, 3))));
    CHECK(K.eq(rep.critical_values[1], fr(rat(-4, 3))));

    REQUIRE(rep.guard_checks.size() == 2);
    const auto& g1 = rep.guard_checks[0];
    REQUIRE(g1.roots_enumerated);
    REQUIRE(g1.zeros.size() == 1);
    CHECK(K.eq(g1.zeros[0], K.one()));
    REQUIRE(g1.q_at.size() == 1);
    CHECK(K.eq(g1.q_at[0], fr(rat(1, 3))));
    const auto& g2 = rep.guard_checks[1];
    REQUIRE(g2.zeros.size() == 1);
    CHECK(K.eq(g2.zeros[0], fr(rat(-2, 7))));
    REQUIRE(g2.q_at.size() == 1);
    CHECK(K.eq(g2.q_at[0], fr(rat(4, 39))));

    auto facts = local_factorizations(K, pm, qm, rep);
    REQUIRE(facts.size() == 2);
    CHECK(facts[0].s == 2);
    CHECK(facts[1].s == 2);
    CHECK(theta(facts) == 0);

    auto lam = lambda_class(K, pm, qm);
    CHECK(lam.case_no == 1);
    CHECK(lam.value == 1);

    auto ev = verdict_entire(K, pm, qm);
    CHECK(ev[0].ruled_out);
    CHECK(ev[1].ruled_out);
    CHECK(ev[0].reason.empty());
    CHECK(ev[0].trace.lhs == 2);
    CHECK(ev[0].trace.rhs == 0);
    CHECK(ev[0].trace.s == std::vector<long>{2, 2});

    auto mv = verdict_mero(K, pm, qm);
    CHECK_FALSE(mv[0].ruled_out);
    CHECK_FALSE(mv[1].ruled_out);
    CHECK(mv[0].reason == "ThetaNotPositive");
    CHECK(mv[0].trace.theta == 0);
}

TEST_CASE("triple contact pair over a square-root extension of thirty-three",
          "[decomp]") {
    simple_extension K(5, "m", {rat(-33), rat(0), rat(1)}, rat(0));
    auto t = K.from_coords({rat(2), rat(1, 3)});
    auto b = K.from_coords({rat(2), rat(-1, 3)});
    auto c = K.div(K.mul(b, b), K.from_int(3));
    auto pm = ratmap_make(K, poly_from_coeffs(K, {c, b, K.one()}),
                          poly_monomial(K, K.one(), 3));
    auto qm = ratmap_make(K, poly_monomial(K, K.one(), 2),
                          poly_from_coeffs(K, {K.from_int(-6), K.from_int(11),
                                               K.from_int(-6), K.one()}));

    auto rep = check_condition_m(K, pm, qm);
    REQUIRE(rep.satisfied == m_status::yes);
    CHECK(rep.k == 1);
    REQUIRE(rep.critical_points.roots.size() == 1);
    CHECK(K.eq(rep.critical_points.roots[0].first, K.neg(b)));
    CHECK(rep.critical_points.roots[0].second == 2);
    CHECK(K.eq(rep.critical_values[0], K.neg(t)));

    REQUIRE(rep.guard_checks.size() == 1);
    const auto& g = rep.guard_checks[0];
    REQUIRE(g.roots_enumerated);
    REQUIRE(g.zeros.size() == 1);
    CHECK(K.eq(g.zeros[0], K.from_coords({rat(0), rat(1, 3)})));
    REQUIRE(g.q_at.size() == 1);
    CHECK(K.eq(g.q_at[0], K.from_coords({rat(693, 32), rat(121, 32)})));

    auto facts = local_factorizations(K, pm, qm, rep);
    REQUIRE(facts.size() == 1);
    CHECK(facts[0].s == 3);
    REQUIRE(poly_degree(K, facts[0].cofactor) == 0);
    CHECK(K.eq(facts[0].cofactor.c[0], t));
    CHECK(theta(facts) == 1);

    auto lam = lambda_class(K, pm, qm);
    CHECK(lam.case_no == 5);
    CHECK(lam.value == 1);
    CHECK(lam.gamma_r == 2);

    auto ev = verdict_entire(K, pm, qm);
    CHECK(ev[0].ruled_out);
    CHECK(ev[0].trace.lhs == 0);
    CHECK_FALSE(ev[1].ruled_out);
    CHECK(ev[1].reason == "InequalityConsistent");

    auto mv = verdict_mero(K, pm, qm);
    CHECK_FALSE(mv[0].ruled_out);
    CHECK_FALSE(mv[1].ruled_out);
    CHECK(mv[0].reason == "InequalityConsistent");
    CHECK(mv[0].trace.theta == 1);
    CHECK(mv[0].trace.gamma_w == 3);
    CHECK(mv[0].trace.lambda_case == 5);
    CHECK(mv[0].trace.lhs == 3);
    CHECK(mv[0].trace.rhs == 15);
}

TEST_CASE("ninth power over a simple pole rules out meromorphic solutions",
          "[decomp]") {
    auto pm = RM({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {-1, 1});  // x^9 / (x - 1)
    auto qm = RM({1, 0, 1}, {1});                            // x^2 + 1

    auto rep = check_condition_m(Q5, pm, qm);
    REQUIRE(rep.satisfied == m_status::yes);
    REQUIRE(rep.k == 2);
    std::size_t i0 = Q5.is_zero(rep.critical_points.roots[0].first) ? 0 : 1;
    std::size_t i98 = 1 - i0;
    CHECK(rep.critical_points.roots[i0].second == 8);
    CHECK(rep.critical_points.roots[i98].first == rat(9, 8));
    CHECK(Q5.is_zero(rep.critical_values[i0]));
    CHECK(rep.critical_values[i98] == rat(387420489, 16777216));
    for (const auto& g : rep.guard_checks) {
        REQUIRE(g.roots_enumerated);
        REQUIRE(g.zeros.size() == 1);
        CHECK(Q5.is_zero(g.zeros[0]));
        REQUIRE(g.q_at.size() == 1);
        CHECK(g.q_at[0] == 1);
    }

    auto facts = local_factorizations(Q5, pm, qm, rep);
    CHECK(facts[i0].s == 9);
    CHECK(facts[i98].s == 2);
    CHECK(*poly_degree(Q5, facts[i98].cofactor) == 7);
    CHECK(theta(facts) == 7);

    auto lam = lambda_class(Q5, pm, qm);
    CHECK(lam.case_no == 4);
    CHECK(lam.value == 2);
    CHECK(lam.gamma_s == 1);

    auto ev = verdict_entire(Q5, pm, qm);
    CHECK_FALSE(ev[0].ruled_out);
    CHECK(ev[0].trace.lhs == -5);

    auto mv = verdict_mero(Q5, pm, qm);
    CHECK(mv[0].ruled_out);
    CHECK(mv[1].ruled_out);
    CHECK(mv[0].trace.lhs == 14);
    CHECK(mv[0].trace.rhs == 13);
    CHECK(mv[0].trace.gamma_w == 0);
    CHECK(mv[0].trace.lambda == 2);
    // Conclusion reproducible from the trace alone.
    const auto& tr = mv[0].trace;
    CHECK(tr.lhs == rat(tr.q * tr.theta));
    CHECK(tr.rhs == rat(tr.p) * (rat(tr.k * tr.gamma_w) + 1) + rat(tr.q) * tr.lambda);
    CHECK(tr.relation_holds == mv[0].ruled_out);
    // Disk ruling out implies the closed-field ruling out.
    CHECK((!mv[1].ruled_out || mv[0].ruled_out));
}

TEST_CASE("first failing clause is reported", "[decomp]") {
    SECTION("equal squares collide at a guard zero") {
        auto pm = RM({0, 0, 1}, {1});
        auto rep = check_condition_m(Q5, pm, pm);
        CHECK(rep.satisfied == m_status::no);
        CHECK(rep.failing_clause == 3);
        REQUIRE(rep.guard_checks.size() == 1);
        CHECK(rep.guard_checks[0].w_nonzero);
        CHECK_FALSE(rep.guard_checks[0].value_avoided);
        CHECK_THROWS_AS(local_factorizations(Q5, pm, pm, rep), hypothesis_violated);
    }
    SECTION("constant target fails the derivative clause") {
        auto rep = check_condition_m(Q5, RM({0, 0, 1}, {1}), RM({3}, {1}));
        CHECK(rep.satisfied == m_status::no);
        CHECK(rep.failing_clause == 1);
    }
    SECTION("cube in characteristic three fails the derivative clause") {
        tadic_functions F3(3);
        auto cube = ratmap_make(F3, poly_monomial(F3, F3.one(), 3), poly_one(F3));
        auto square = ratmap_make(F3, poly_monomial(F3, F3.one(), 2), poly_one(F3));
        auto rep = check_condition_m(F3, cube, square);
        CHECK(rep.satisfied == m_status::no);
        CHECK(rep.failing_clause == 1);
    }
    SECTION("colliding critical values with a resultant-certified guard") {
        auto pm = RM({0, 0, -2, 0, 1}, {1});  // x^4 - 2x^2, values 0, -1, -1
        auto qm = RM({0, 1, 0, 1}, {1});      // x^3 + x, guard zeros irrational
        auto rep = check_condition_m(Q5, pm, qm);
        CHECK(rep.satisfied == m_status::no);
        CHECK(rep.failing_clause == 4);
        REQUIRE(rep.k == 3);
        for (const auto& g : rep.guard_checks) {
            CHECK_FALSE(g.roots_enumerated);
            CHECK(g.w_nonzero);
            CHECK(g.value_avoided);
            CHECK(g.certificate.find("resultant") != std::string::npos);
        }
    }
    SECTION("equal-degree target hits the leading-coefficient ratio") {
        auto pm = RM({1, 0, 1}, {1});         // critical value 1
        auto qm = RM({5, 0, 1}, {1, 1, 1});   // ratio of leading coefficients 1
        auto rep = check_condition_m(Q5, pm, qm);
        CHECK(rep.satisfied == m_status::no);
        CHECK(rep.failing_clause == 5);
        // The guard is a nonzero constant: vacuously clean.
        REQUIRE(rep.guard_checks.size() == 1);
        CHECK(rep.guard_checks[0].zeros.empty());
        CHECK(rep.guard_checks[0].w_nonzero);
        CHECK(rep.guard_checks[0].value_avoided);
    }
    SECTION("no critical points fails the count clause") {
        auto rep = check_condition_m(Q5, RM({1}, {0, 1}), RM({0, 0, 1}, {1}));
        CHECK(rep.satisfied == m_status::no);
        CHECK(rep.failing_clause == 3);
        CHECK(rep.k == 0);
    }
    SECTION("unresolved critical points stay inconclusive") {
        auto rep = check_condition_m(Q5, RM({0, 3, 0, 1}, {1}), RM({0, 0, 1}, {1}));
        CHECK(rep.satisfied == m_status::inconclusive);
        CHECK(rep.reason.find("not resolved") != std::string::npos);
        auto ev = verdict_entire(Q5, RM({0, 3, 0, 1}, {1}), RM({0, 0, 1}, {1}));
        CHECK_FALSE(ev[0].ruled_out);
        CHECK(ev[0].reason == "ConditionMUnverified");
        CHECK_FALSE(ev[1].ruled_out);
    }
}

TEST_CASE("local factorization certificates rebuild the numerator", "[decomp]") {
    auto pm = RM({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {-1, 1});
    auto qm = RM({1, 0, 1}, {1});
    auto rep = check_condition_m(Q5, pm, qm);
    REQUIRE(rep.satisfied == m_status::yes);
    auto facts = local_factorizations(Q5, pm, qm, rep);
    REQUIRE(facts.size() == 2);
    const long p = 9;
    for (const auto& lf : facts) {
        auto lin = poly_from_coeffs(Q5, {Q5.neg(lf.c), Q5.one()});
        auto rebuilt = poly_add(
            Q5, poly_mul(Q5, poly_pow(Q5, lin, lf.s), lf.cofactor),
            poly_scale(Q5, pm.den, lf.value));
        CHECK(poly_eq(Q5, rebuilt, pm.num));
        CHECK_FALSE(Q5.is_zero(poly_eval(Q5, lf.cofactor, lf.c)));
        CHECK(*poly_degree(Q5, lf.cofactor) <= p - lf.s);
        CHECK(*poly_degree(Q5, lf.target_shift) == 2);
        auto gd = poly_derivative(Q5, lf.target_shift);
        CHECK(*poly_degree(Q5, poly_gcd(Q5, lf.target_shift, gd)) == 0);
        CHECK(*poly_degree(Q5, poly_gcd(Q5, lf.target_shift, qm.den)) == 0);
    }
    CHECK_FALSE(Q5.is_zero(
        poly_resultant(Q5, facts[0].target_shift, facts[1].target_shift)));
    auto diff = poly_sub(Q5, facts[0].target_shift, facts[1].target_shift);
    CHECK(poly_eq(Q5, diff,
                  poly_scale(Q5, qm.den, Q5.sub(facts[1].value, facts[0].value))));

    SECTION("pure cube against a linear target") {
        auto cube = RM({0, 0, 0, 1}, {1});
        auto lin = RM({1, 1}, {1});
        auto r2 = check_condition_m(Q5, cube, lin);
        REQUIRE(r2.satisfied == m_status::yes);
        auto f2 = local_factorizations(Q5, cube, lin, r2);
        REQUIRE(f2.size() == 1);
        CHECK(f2[0].s == 3);
        CHECK(poly_eq(Q5, f2[0].cofactor, poly_one(Q5)));
        CHECK(Q5.is_zero(f2[0].value));
    }
}

TEST_CASE("pole bound case table", "[decomp]") {
    SECTION("equal target degrees take the degree ratio") {
        auto lam = lambda_class(Q5, RM({0, 0, 0, 1}, {-1, 1}),
                                RM({5, 0, 1}, {1, 0, 1}));
        CHECK(lam.case_no == 1);
        CHECK(lam.value == rat(3, 2));
    }
    SECTION("pole-heavy target with zero-heavy source counts source zeros") {
        auto lam = lambda_class(Q5, RM({2, -3, 1}, {0, 1}),
                                RM({0, 1}, {1, 1, 1}));
        CHECK(lam.case_no == 2);
        CHECK(lam.gamma_r == 2);
        CHECK(lam.value == 1);
    }
    SECTION("zero-heavy target with pole-heavy source counts source poles") {
        auto lam = lambda_class(Q5, RM({0, 1}, {-1, 3, -3, 1}),
                                RM({2, 0, 1}, {1, 1}));
        CHECK(lam.case_no == 3);
        CHECK(lam.gamma_s == 1);
        CHECK(lam.value == 1);
    }
    SECTION("zero-heavy target with zero-heavy source adds one pole") {
        auto lam = lambda_class(Q5, RM({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {-1, 1}),
                                RM({1, 0, 1}, {1}));
        CHECK(lam.case_no == 4);
        CHECK(lam.gamma_s == 1);
        CHECK(lam.value == 2);
    }
    SECTION("pole-heavy target with pole-heavy source adds one zero") {
        auto lam = lambda_class(Q5, RM({1, 0, 1}, {0, 0, 0, 1}),
                                RM({0, 1}, {-1, 0, 1}));
        CHECK(lam.case_no == 5);
        CHECK(lam.gamma_r == 2);
        CHECK(lam.value == rat(3, 2));
    }
    SECTION("constant maps are rejected") {
        CHECK_THROWS_AS(lambda_class(Q5, RM({0, 1}, {1}), RM({3}, {1})),
                        hypothesis_violated);
    }
}

TEST_CASE("positive characteristic verdicts are chi-root invariant", "[decomp]") {
    tadic_functions F3(3);
    auto T = F3.gen();
    auto t3 = F3.mul(F3.mul(T, T), T);
    auto one = poly_one(F3);
    auto pm = ratmap_make(F3, poly_from_coeffs(F3, {t3, F3.zero(), F3.one()}), one);
    auto qm = ratmap_make(F3, poly_monomial(F3, F3.one(), 2), one);

    auto rep = check_condition_m(F3, pm, qm);
    REQUIRE(rep.satisfied == m_status::yes);
    CHECK(rep.k == 1);
    CHECK(F3.eq(rep.critical_values[0], t3));

    auto ev = verdict_entire(F3, pm, qm);
    CHECK(ev[0].ruled_out);
    CHECK_FALSE(ev[1].ruled_out);
    CHECK(ev[0].trace.lhs == 0);
    REQUIRE_FALSE(ev[0].trace.notes.empty());
    CHECK(ev[0].trace.notes[0].find("positive characteristic") != std::string::npos);

    auto mv = verdict_mero(F3, pm, qm);
    CHECK(mv[0].reason == "ThetaNotPositive");

    // Coefficientwise chi-th root of every polynomial leaves the trace alone.
    auto pm1 = ratmap_make(F3, poly_coeff_chi_root(F3, pm.num),
                           poly_coeff_chi_root(F3, pm.den));
    auto qm1 = ratmap_make(F3, poly_coeff_chi_root(F3, qm.num),
                           poly_coeff_chi_root(F3, qm.den));
    CHECK(F3.eq(check_condition_m(F3, pm1, qm1).critical_values[0], T));
    auto ev1 = verdict_entire(F3, pm1, qm1);
    auto mv1 = verdict_mero(F3, pm1, qm1);
    for (int i = 0; i < 2; ++i) {
        check_same_trace(ev[static_cast<std::size_t>(i)],
                         ev1[static_cast<std::size_t>(i)]);
        check_same_trace(mv[static_cast<std::size_t>(i)],
                         mv1[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("value count and forced constancy routes", "[decomp]") {
    SECTION("two critical values against a linear target") {
        auto v = verdict_entire_value_count(Q5, RM({0, -3, 0, 1}, {1}),
                                            RM({0, 1}, {1}));
        CHECK(v.ruled_out);
        CHECK(v.trace.k == 2);
        CHECK(v.trace.lhs == 4);
        CHECK(v.trace.rhs == 9);
    }
    SECTION("three critical values against a cubic target") {
        auto pm = RM({0, 0, -1, rat(1, 3), rat(1, 4)}, {1});
        auto v = verdict_entire_value_count(Q5, pm, RM({1, 0, 0, 1}, {1}));
        CHECK(v.ruled_out);
        CHECK(v.trace.k == 3);
        CHECK(v.trace.lhs == 15);
        CHECK(v.trace.rhs == 16);
    }
    SECTION("target degree at the source degree fails the count hypothesis") {
        auto pm = RM({0, 0, -1, rat(1, 3), rat(1, 4)}, {1});
        auto v = verdict_entire_value_count(Q5, pm, RM({1, 0, 0, 0, 1}, {1}));
        CHECK_FALSE(v.ruled_out);
        CHECK(v.reason == "HypothesisFails");
    }
    SECTION("unresolved critical points of the numerator") {
        auto pm = RM({0, 0, rat(3, 2), 0, rat(1, 4)}, {1});
        auto v = verdict_entire_value_count(Q5, pm, RM({0, 0, 0, 1}, {1}));
        CHECK_FALSE(v.ruled_out);
        CHECK(v.reason == "RootsUnresolved");
        auto w = verdict_entire_forced_constant(Q5, pm, RM({0, 0, 0, 1}, {1}));
        CHECK(w.reason == "RootsUnresolved");
    }
    SECTION("four distinct critical values force constancy") {
        auto pm = RM({0, 24, -25, rat(35, 3), rat(-5, 2), rat(1, 5)}, {1});
        auto v = verdict_entire_forced_constant(Q5, pm, RM({1, 0, 0, 0, 1}, {1}));
        CHECK(v.ruled_out);
        CHECK(v.trace.k == 4);
        CHECK(v.trace.lhs == 4);
        CHECK(v.trace.rhs == 4);
    }
    SECTION("low target degree fails the constancy hypotheses") {
        auto pm = RM({0, 24, -25, rat(35, 3), rat(-5, 2), rat(1, 5)}, {1});
        auto v = verdict_entire_forced_constant(Q5, pm, RM({0, 0, 1}, {1}));
        CHECK_FALSE(v.ruled_out);
        CHECK(v.reason == "HypothesisFails");
    }
    SECTION("repeated critical values fail the constancy hypotheses") {
        auto v = verdict_entire_forced_constant(Q5, RM({0, 0, -2, 0, 1}, {1}),
                                                RM({0, 0, 0, 1}, {1}));
        CHECK_FALSE(v.ruled_out);
        CHECK(v.reason == "HypothesisFails");
        CHECK(v.trace.k == 2);
        CHECK(v.trace.rhs == 3);
    }
}
