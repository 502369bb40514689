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

#include "ultranev/nevanlinna.hpp"

using namespace ultranev;

namespace {

using Q5 = padic_rationals;
using F3T = tadic_functions;

poly<Q5> qpoly(const Q5& k, std::vector<rat> c) { return poly_from_rats(k, std::move(c)); }

mero<Q5> qmero(const Q5& k, std::vector<rat> num, std::vector<rat> den, long order = 12) {
    return mero_from_ratmap(k, ratmap_make(k, qpoly(k, num), qpoly(k, den)), order);
}

}  // namespace

TEST_CASE("counting functions from a divisor", "[nevanlinna]") {
    SECTION("single unit zero") {
        divisor d{{{rat(0), 1, 1}}, 0, {true}};
        auto b = nev_from_divisor(d);
        CHECK(b.Z.domain_start() == rat(0));
        CHECK(b.Z.unbounded());
        CHECK(plf_eval(b.Z, rat(0)) == rat(0));
        CHECK(plf_eval(b.Z, rat(2)) == rat(2));
        CHECK(plf_eval(b.N, rat(2)) == rat(0));
        CHECK(b.T == b.Z);
        CHECK(b.tilde_exact);
    }

    SECTION("origin order, ramps, and the chi power") {
        divisor d{{{rat(-1), -1, 1}, {rat(1), 3, 2}}, 2, {true}};
        auto b = nev_from_divisor(d, 3);
        CHECK(b.Z.domain_start() == rat(-1));
        CHECK(plf_eval(b.Z, rat(-1)) == rat(-6));  // 3 * (2 t) at t = -1
        CHECK(plf_eval(b.Z, rat(0)) == rat(0));
        CHECK(plf_eval(b.Z, rat(2)) == rat(21));  // 3 * (2*2 + 3*1)
        CHECK(plf_eval(b.N, rat(0)) == rat(3));   // 3 * (t+1)
        CHECK(plf_eval(b.N, rat(2)) == rat(9));
        CHECK(plf_eval(b.T, rat(0)) == rat(3));   // poles dominate small radii
        CHECK(plf_eval(b.T, rat(2)) == rat(21));
        // Crossing of 3(t+1) and 3*2t becomes a breakpoint at t = 1.
        CHECK(plf_eval(b.T, rat(1)) == rat(6));
        // Tilde variants: unscaled, one point per origin, distinct weights.
        CHECK(plf_eval(b.Zt, rat(2)) == rat(4));  // t + 2(t-1)
        CHECK(plf_eval(b.Nt, rat(2)) == rat(3));  // (t+1), no origin pole
        CHECK(b.chi_power == 3);
    }

    SECTION("anonymous polygon counts poison tilde exactness") {
        divisor d{{{rat(0), 2, 0}}, 0, {true}};
        auto b = nev_from_divisor(d);
        CHECK_FALSE(b.tilde_exact);
        CHECK(plf_eval(b.Zt, rat(1)) == rat(2));  // falls back to multiplicity
    }

    SECTION("bounded certification clips the domain") {
        divisor d{{{rat(-4), 1, 1}}, 0, {false, rat(-3), false}};
        auto b = nev_from_divisor(d);
        CHECK(b.Z.domain_start() == rat(-4));
        REQUIRE_FALSE(b.Z.unbounded());
        CHECK(*b.Z.domain_end() == rat(-3));

        divisor tight{{{rat(-3), 1, 1}}, 0, {false, rat(-3), true}};
        auto bt = nev_from_divisor(tight);
        CHECK(bt.Z.domain_start() == rat(-4));  // widened to keep the window nonempty
        CHECK(*bt.Z.domain_end() == rat(-3));
    }
}

TEST_CASE("analysis reduces chi powers before counting", "[nevanlinna]") {
    F3T k(3);
    auto one = k.one();
    auto cube = series_from_poly(k, poly_from_coeffs(k, {one, k.zero(), k.zero(), one}), 6);
    auto b = nev_analyze(k, mero_from_series(k, cube));
    CHECK(b.chi_power == 3);
    CHECK(plf_eval(b.Z, rat(1)) == rat(3));
    CHECK(plf_eval(b.Zt, rat(1)) == rat(1));
    CHECK(b.tilde_exact);
}

TEST_CASE("second main theorem bookkeeping", "[nevanlinna]") {
    Q5 k(5);

    SECTION("linear entire function is sharp") {
        auto f = qmero(k, {1, 1}, {1});
        auto rep = check_theorem_n(k, f, {rat(2), rat(3)});
        CHECK(rep.n == 2);
        CHECK(rep.s == 0);
        CHECK(rep.chi_s == 1);
        CHECK(rep.status == asymptotic_status::HoldsEventually);
        CHECK(rep.slack == plfun::constant(rat(0), std::nullopt, rat(0)));
        CHECK(rep.tilde_exact);
    }

    SECTION("meromorphic function gains pole slack") {
        auto f = qmero(k, {1}, {1, -1});
        auto rep = check_theorem_n(k, f, {rat(2), rat(3)});
        CHECK(rep.status == asymptotic_status::HoldsEventually);
        CHECK(plf_eventual_slope(rep.slack) == rat(1));
    }

    SECTION("chi power reduction keeps the inequality sharp") {
        F3T k3(3);
        auto one = k3.one();
        auto cube =
            series_from_poly(k3, poly_from_coeffs(k3, {one, k3.zero(), k3.zero(), one}), 6);
        auto f = mero_from_series(k3, cube);
        auto rep = check_theorem_n(k3, f, {k3.from_int(1), k3.from_int(2)});
        CHECK(rep.s == 1);
        CHECK(rep.chi_s == 3);
        CHECK(rep.status == asymptotic_status::HoldsEventually);
        CHECK(plf_eventual_slope(rep.slack) == rat(0));
    }

    SECTION("hypotheses are enforced") {
        auto f = qmero(k, {1, 1}, {1});
        CHECK_THROWS_AS(check_theorem_n(k, f, {rat(2)}), hypothesis_violated);
        CHECK_THROWS_AS(check_theorem_n(k, f, {rat(2), rat(2)}), hypothesis_violated);
    }

    SECTION("missing chi roots of targets need an extension") {
        F3T k3(3);
        auto one = k3.one();
        auto cube =
            series_from_poly(k3, poly_from_coeffs(k3, {one, k3.zero(), k3.zero(), one}), 6);
        auto f = mero_from_series(k3, cube);
        CHECK_THROWS_AS(check_theorem_n(k3, f, {k3.gen(), k3.from_int(1)}), needs_extension);
    }

    SECTION("truncated data gives a window verdict") {
        auto f = mero_from_series(
            k, series_reciprocal(k, series_from_poly(k, qpoly(k, {1, -5}), 8)));
        auto rep = check_theorem_n(k, f, {rat(2), rat(3)});
        CHECK(rep.status == asymptotic_status::InconclusiveWithinCertifiedRadius);
        REQUIRE_FALSE(rep.slack.unbounded());
        CHECK(*rep.slack.domain_end() == rat(1));
    }
}

TEST_CASE("height of a composition scales with the map degree", "[nevanlinna]") {
    Q5 k(5);

    SECTION("quadratic map along a degree one function") {
        auto p = ratmap_make(k, qpoly(k, {1, 0, 1}), poly_one(k));
        auto f = qmero(k, {0, 1}, {-1, 1});
        auto rep = check_degree_identity(k, p, f);
        CHECK(rep.map_degree == 2);
        CHECK(rep.status == asymptotic_status::HoldsEventually);
        CHECK(rep.diff.bounded);
        CHECK(rep.diff.sup_abs == rat(0));
    }

    SECTION("high degree map along x") {
        auto p = ratmap_make(k, poly_monomial(k, k.one(), 9), qpoly(k, {-1, 1}));
        auto f = qmero(k, {0, 1}, {1});
        auto rep = check_degree_identity(k, p, f);
        CHECK(rep.map_degree == 9);
        CHECK(rep.status == asymptotic_status::HoldsEventually);
    }

    SECTION("bounded windows stay inconclusive") {
        auto p = ratmap_make(k, qpoly(k, {1, 0, 1}), poly_one(k));
        auto f = mero_from_series(
            k, series_reciprocal(k, series_from_poly(k, qpoly(k, {1, -5}), 8)));
        auto rep = check_degree_identity(k, p, f);
        CHECK(rep.status == asymptotic_status::InconclusiveWithinCertifiedRadius);
    }

    SECTION("constant maps are refused") {
        auto p = ratmap_make(k, qpoly(k, {7}), poly_one(k));
        auto f = qmero(k, {0, 1}, {1});
        CHECK_THROWS_AS(check_degree_identity(k, p, f), hypothesis_violated);
    }
}

TEST_CASE("composite identity consistency to working order", "[nevanlinna]") {
    Q5 k(5);
    auto p = ratmap_make(k, qpoly(k, {0, 0, 1}), poly_one(k));  // x^2
    auto q = ratmap_make(k, qpoly(k, {0, 1}), poly_one(k));     // x

    SECTION("exact identity") {
        auto f = qmero(k, {1, 1}, {1});
        auto g = qmero(k, {1, 2, 1}, {1});
        auto rep = check_pq_relation(k, p, f, q, g);
        CHECK(rep.consistent);
        CHECK(rep.exact);
    }

    SECTION("wrong candidate is caught") {
        auto f = qmero(k, {1, 1}, {1});
        auto g = qmero(k, {1, 2}, {1});
        auto rep = check_pq_relation(k, p, f, q, g);
        CHECK_FALSE(rep.consistent);
    }

    SECTION("x power mismatch is caught") {
        auto f = qmero(k, {0, 1}, {1});
        auto g = qmero(k, {0, 1}, {1});
        auto rep = check_pq_relation(k, p, f, q, g);
        CHECK_FALSE(rep.consistent);
        CHECK(rep.lhs_x_power == 2);
        CHECK(rep.rhs_x_power == 1);
    }

    SECTION("truncated data is consistent without being exact") {
        auto s = series_from_poly(k, qpoly(k, {1, 1}), 6);
        s.tail_zero = false;
        auto f = mero_from_series(k, s);
        auto g = qmero(k, {1, 2, 1}, {1});
        auto rep = check_pq_relation(k, p, f, q, g);
        CHECK(rep.consistent);
        CHECK_FALSE(rep.exact);
        CHECK(rep.checked_order >= 6);
    }
}

TEST_CASE("pole slope against scaled height slope", "[nevanlinna]") {
    Q5 k(5);
    auto f = qmero(k, {0, 1}, {-1, 1});
    auto g = qmero(k, {0, 1}, {-1, 1});
    auto ok = check_lambda_bound(k, f, g, rat(1));
    CHECK(ok.holds);
    CHECK(ok.eventual);
    CHECK(ok.pole_slope == rat(1));
    CHECK(ok.t_slope == rat(1));
    auto bad = check_lambda_bound(k, f, g, rat(1, 2));
    CHECK_FALSE(bad.holds);
}

TEST_CASE("growth classification toward the unit circle", "[nevanlinna]") {
    SECTION("exact data is bounded type") {
        divisor d{{{rat(-1), 1, 1}}, 0, {true}};
        CHECK(classify_boundedness(d).cls == growth_class::BoundedType);
    }

    SECTION("certification through the closed disk is bounded type") {
        divisor d{{{rat(-1), 1, 0}}, 0, {false, rat(0), true}};
        CHECK(classify_boundedness(d).cls == growth_class::BoundedType);
    }

    SECTION("zeros accumulating at the certified end read as unbounded") {
        divisor d{{{rat(-1), 1, 0},
                   {rat(-1, 2), 1, 0},
                   {rat(-1, 4), 1, 0},
                   {rat(-1, 8), 1, 0}},
                  0,
                  {false, rat(-1, 16), false}};
        auto rep = classify_boundedness(d);
        CHECK(rep.cls == growth_class::UnboundedType);
        CHECK(rep.last_u == rat(-1, 8));
    }

    SECTION("sparse windows stay inconclusive") {
        divisor far{{{rat(-1), 1, 0}}, 0, {false, rat(-1, 16), false}};
        CHECK(classify_boundedness(far).cls == growth_class::InconclusiveAtOrder);
        divisor empty{{}, 0, {false, rat(-1, 16), false}};
        CHECK(classify_boundedness(empty).cls == growth_class::InconclusiveAtOrder);
    }

    SECTION("representative level wrapper") {
        Q5 k(5);
        auto f = qmero(k, {-1, 1}, {1});
        CHECK(classify_boundedness(k, f).cls == growth_class::BoundedType);
    }
}
