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

#include "ultranev/serialize.hpp"

using namespace ultranev;

namespace {

const padic_rationals Q5(5);

poly<padic_rationals> P(const std::vector<rat>& c) { return poly_from_rats(Q5, c); }

ratmap<padic_rationals> RM(const std::vector<rat>& n, const std::vector<rat>& d) {
    return ratmap_make(Q5, P(n), P(d));
}

}  // namespace

TEST_CASE("piecewise linear functions round trip through JSON", "[serialize]") {
    auto b = nev_from_divisor(parse_divisor("zero@0 x1"));
    json j = plf_to_json(b.Z);
    CHECK(j["domain"][0] == "0");
    CHECK(j["domain"][1] == "inf");
    CHECK(j["anchor"] == "0");
    REQUIRE(j["segments"].size() == 1);
    CHECK(j["segments"][0][0] == "0");
    CHECK(j["segments"][0][1] == "1");
    CHECK(plf_struct_eq(plf_from_json(j), b.Z));

    plfun bent(rat(-2), rat(1), rat(3), {{rat(-2), rat(1, 2)}, {rat(0), rat(5)}});
    json jb = plf_to_json(bent);
    CHECK(jb["domain"][1] == "1");
    CHECK(jb["segments"][0][1] == "1/2");
    CHECK(plf_struct_eq(plf_from_json(jb), bent));
    CHECK(plf_to_json(plf_from_json(jb)) == jb);
}

TEST_CASE("counting bundles keep all five functions and the power factor",
          "[serialize]") {
    auto b = nev_from_divisor(parse_divisor("origin x-2 zero@0 x3 pole@1/2 x1"), bigint(3));
    json j = nev_to_json(b);
    for (const char* key : {"Z", "N", "T", "Zt", "Nt"}) CHECK(j.contains(key));
    CHECK(j["chi_power"] == "3");
    auto back = nev_from_json(j);
    CHECK(plf_struct_eq(back.Z, b.Z));
    CHECK(plf_struct_eq(back.N, b.N));
    CHECK(plf_struct_eq(back.T, b.T));
    CHECK(plf_struct_eq(back.Zt, b.Zt));
    CHECK(plf_struct_eq(back.Nt, b.Nt));
    CHECK(back.chi_power == b.chi_power);
    CHECK(back.tilde_exact == b.tilde_exact);
    CHECK(back.bound.infinite == b.bound.infinite);
    CHECK(nev_to_json(back) == j);
}

TEST_CASE("asymptotic reports expose the margin and mapped verdict names",
          "[serialize]") {
    auto f = mero_from_series(
        Q5, series_make(Q5, {Q5.one(), Q5.one()}, 12, true));
    auto rep = check_theorem_n(Q5, f, {Q5.from_rat(rat(2)), Q5.from_rat(rat(3))});
    json j = theorem_n_to_json(rep);
    CHECK(j["verdict"] == "HoldsEventually");
    CHECK(j["n"] == 2);
    CHECK(j.contains("margin"));
    CHECK(j["slack_slope"] == rat_to_string(plf_eventual_slope(rep.slack)));
    auto back = theorem_n_from_json(j);
    CHECK(back.n == rep.n);
    CHECK(back.s == rep.s);
    CHECK(back.chi_s == rep.chi_s);
    CHECK(back.status == rep.status);
    CHECK(plf_struct_eq(back.lhs, rep.lhs));
    CHECK(plf_struct_eq(back.rhs, rep.rhs));
    CHECK(plf_struct_eq(back.slack, rep.slack));
    CHECK(theorem_n_to_json(back) == j);

    theorem_n_report fails;
    fails.status = asymptotic_status::FailsEventually;
    CHECK(theorem_n_to_json(fails)["verdict"] == "ViolatedEventually");
    CHECK(theorem_n_from_json(theorem_n_to_json(fails)).status ==
          asymptotic_status::FailsEventually);
}

TEST_CASE("condition reports round trip over an extension", "[serialize]") {
    simple_extension K(5, "s", {rat(-3), rat(0), rat(1)}, rat(0));
    auto a2 = K.from_coords({rat(-1, 3), rat(1, 2)});
    auto a0 = K.from_coords({rat(-1, 3), rat(-1, 2)});
    auto pm = ratmap_make(K, poly_from_coeffs(K, {a0, K.one(), a2}),
                          poly_from_coeffs(K, {K.one(), K.zero(), K.one()}));
    auto qm = ratmap_make(K, poly_monomial(K, K.one(), 2),
                          poly_from_coeffs(K, {K.one(), K.one(), K.one()}));
    auto rep = check_condition_m(K, pm, qm);
    json j = cond_m_to_json(K, rep);
    CHECK(j["satisfied"] == "Yes");
    CHECK(j["k"] == 2);
    REQUIRE(j["critical_points"].size() == 2);
    CHECK(j["critical_points"][0]["point"] == "2 + s");
    CHECK(j["critical_values"][0] == "2/3");
    REQUIRE(j["d_checks"].size() == 2);
    CHECK(j["d_checks"][0]["roots_enumerated"] == true);

    auto back = cond_m_from_json(K, j);
    CHECK(back.satisfied == rep.satisfied);
    CHECK(back.k == rep.k);
    REQUIRE(back.critical_points.roots.size() == rep.critical_points.roots.size());
    for (std::size_t i = 0; i < rep.critical_points.roots.size(); ++i) {
        CHECK(K.eq(back.critical_points.roots[i].first, rep.critical_points.roots[i].first));
        CHECK(back.critical_points.roots[i].second == rep.critical_points.roots[i].second);
    }
    for (std::size_t i = 0; i < rep.critical_values.size(); ++i)
        CHECK(K.eq(back.critical_values[i], rep.critical_values[i]));
    REQUIRE(back.guard_checks.size() == rep.guard_checks.size());
    for (std::size_t i = 0; i < rep.guard_checks.size(); ++i) {
        CHECK(back.guard_checks[i].roots_enumerated == rep.guard_checks[i].roots_enumerated);
        CHECK(back.guard_checks[i].value_avoided == rep.guard_checks[i].value_avoided);
        REQUIRE(back.guard_checks[i].zeros.size() == rep.guard_checks[i].zeros.size());
        for (std::size_t z = 0; z < rep.guard_checks[i].zeros.size(); ++z)
            CHECK(K.eq(back.guard_checks[i].zeros[z], rep.guard_checks[i].zeros[z]));
    }
    CHECK(cond_m_to_json(K, back) == j);
}

TEST_CASE("verdicts serialize the full inequality trace", "[serialize]") {
    auto pm = RM({rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)},
                 {rat(-1), rat(1)});
    auto qm = RM({rat(1), rat(0), rat(1)}, {rat(1)});
    auto mero_pair = verdict_mero(Q5, pm, qm);
    json j = verdict_to_json(mero_pair[0]);
    CHECK(j["setting"] == "MeroOnK");
    CHECK(j["conclusion"] == "RuledOut");
    CHECK(j["trace"]["p"] == 9);
    CHECK(j["trace"]["theta"] == 7);
    CHECK(j["trace"]["gammaW"] == 0);
    CHECK(j["trace"]["lambda"]["case"] == 4);
    CHECK(j["trace"]["lambda"]["value"] == "2");
    CHECK(j["trace"]["inequality"]["lhs"] == "14");
    CHECK(j["trace"]["inequality"]["rhs"] == "13");
    CHECK(j["trace"]["inequality"]["relation"] == ">=");
    CHECK(verdict_to_json(verdict_from_json(j)) == j);

    auto entire_pair = verdict_entire(Q5, pm, qm);
    json je = verdict_to_json(entire_pair[0]);
    CHECK(je["conclusion"] == "Inconclusive(InequalityConsistent)");
    CHECK(je["trace"]["inequality"]["lhs"] == "-5");
    auto back = verdict_from_json(je);
    CHECK_FALSE(back.ruled_out);
    CHECK(back.reason == "InequalityConsistent");
    CHECK(verdict_to_json(back) == je);

    CHECK_THROWS_AS(verdict_from_json(json{{"setting", "Nonsense"},
                                           {"conclusion", "RuledOut"},
                                           {"trace", json::object()}}),
                    parse_error);
}

TEST_CASE("field descriptions select the declared field", "[serialize]") {
    auto fs = field_spec_from_json(json::parse(R"({"char": 0, "p": 5})"));
    CHECK(with_field(fs, [](const auto& k) { return k.characteristic(); }) == 0);

    auto ext = field_spec_from_json(json::parse(
        R"({"char": 0, "p": 5, "ext": {"gen": "s", "minpoly": "x^2-3", "val": "0"}})"));
    bool gen_squares_to_three = with_field(ext, [](const auto& k) {
        auto s = k.symbol_value("s");
        if (!s) return false;
        return k.eq(k.mul(*s, *s), k.from_rat(rat(3)));
    });
    CHECK(gen_squares_to_three);

    auto charp = field_spec_from_json(json::parse(R"({"char": 3, "p": 3})"));
    CHECK(with_field(charp, [](const auto& k) { return k.characteristic(); }) == 3);
    CHECK(with_field(field_spec_from_json(json::parse(R"({"char": 3})")),
                     [](const auto& k) { return k.chi(); }) == 3);

    CHECK_THROWS_AS(field_spec_from_json(json::parse(R"({"char": 3, "p": 5})")), field_error);
    CHECK_THROWS_AS(field_spec_from_json(json::parse(R"({"char": 0})")), field_error);
    auto bad_ext = field_spec_from_json(json::parse(
        R"({"char": 3, "p": 3, "ext": {"gen": "s", "minpoly": "x^2-3", "val": "0"}})"));
    CHECK_THROWS_AS(with_field(bad_ext, [](const auto&) { return 0; }), field_error);

    json round = field_spec_to_json(ext);
    CHECK(round["ext"]["minpoly"] == "x^2-3");
    auto again = field_spec_from_json(round);
    CHECK(again.gen == "s");
    CHECK(again.p == 5);
}
