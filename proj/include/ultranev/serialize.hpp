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

#ifndef ULTRANEV_SERIALIZE_HPP
#define ULTRANEV_SERIALIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decomp.hpp"
#include "expr.hpp"
#include "nevanlinna.hpp"

namespace ultranev {

// JSON shapes for every report the library produces.  All rationals travel
// as exact "a/b" strings, never decimals, and every to_json here has a
// from_json that rebuilds a structurally equal value.

using json = nlohmann::ordered_json;

inline json rat_json(const rat& q) { return json(rat_to_string(q)); }

inline rat rat_unjson(const json& j) { return rat_from_string(j.get<std::string>()); }

// ---------------------------------------------------------------------------
// Piecewise linear functions of the log-radius.
// ---------------------------------------------------------------------------

inline json plf_to_json(const plfun& f) {
    json j;
    j["domain"] = json::array(
        {rat_json(f.domain_start()), f.unbounded() ? json("inf") : rat_json(*f.domain_end())});
    j["anchor"] = rat_json(f.anchor_value());
    json segs = json::array();
    for (const auto& s : f.segments()) segs.push_back(json::array({rat_json(s.bp), rat_json(s.slope)}));
    j["segments"] = std::move(segs);
    return j;
}

inline plfun plf_from_json(const json& j) {
    rat start = rat_unjson(j.at("domain").at(0));
    std::optional<rat> end;
    const json& e = j.at("domain").at(1);
    if (!(e.is_string() && e.get<std::string>() == "inf")) end = rat_unjson(e);
    std::vector<plf_segment> segs;
    for (const auto& s : j.at("segments"))
        segs.push_back({rat_unjson(s.at(0)), rat_unjson(s.at(1))});
    return plfun(start, end, rat_unjson(j.at("anchor")), std::move(segs));
}

inline bool plf_struct_eq(const plfun& a, const plfun& b) {
    if (a.domain_start() != b.domain_start() || a.unbounded() != b.unbounded()) return false;
    if (!a.unbounded() && *a.domain_end() != *b.domain_end()) return false;
    if (a.anchor_value() != b.anchor_value()) return false;
    const auto& as = a.segments();
    const auto& bs = b.segments();
    if (as.size() != bs.size()) return false;
    for (std::size_t i = 0; i < as.size(); ++i)
        if (as[i].bp != bs[i].bp || as[i].slope != bs[i].slope) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certified bounds and counting-function bundles.
// ---------------------------------------------------------------------------

inline json bound_to_json(const certified_bound& b) {
    json j;
    j["infinite"] = b.infinite;
    j["value"] = rat_json(b.value);
    j["inclusive"] = b.inclusive;
    return j;
}

inline certified_bound bound_from_json(const json& j) {
    return {j.at("infinite").get<bool>(), rat_unjson(j.at("value")),
            j.at("inclusive").get<bool>()};
}

inline json nev_to_json(const nev_bundle& b) {
    json j;
    j["Z"] = plf_to_json(b.Z);
    j["N"] = plf_to_json(b.N);
    j["T"] = plf_to_json(b.T);
    j["Zt"] = plf_to_json(b.Zt);
    j["Nt"] = plf_to_json(b.Nt);
    j["chi_power"] = b.chi_power.str();
    j["tilde_exact"] = b.tilde_exact;
    j["bound"] = bound_to_json(b.bound);
    return j;
}

inline nev_bundle nev_from_json(const json& j) {
    nev_bundle b{plf_from_json(j.at("Z")),  plf_from_json(j.at("N")),
                 plf_from_json(j.at("T")),  plf_from_json(j.at("Zt")),
                 plf_from_json(j.at("Nt")), bigint(j.at("chi_power").get<std::string>()),
                 j.value("tilde_exact", true),
                 j.contains("bound") ? bound_from_json(j.at("bound")) : certified_bound{}};
    return b;
}

// ---------------------------------------------------------------------------
// Multi-target counting inequality reports.
// ---------------------------------------------------------------------------

inline const char* asymptotic_status_name(asymptotic_status s) {
    switch (s) {
        case asymptotic_status::HoldsEventually: return "HoldsEventually";
        case asymptotic_status::FailsEventually: return "ViolatedEventually";
        case asymptotic_status::InconclusiveWithinCertifiedRadius:
            return "InconclusiveWithinCertifiedRadius";
    }
    return "?";
}

inline asymptotic_status asymptotic_status_parse(const std::string& s) {
    if (s == "HoldsEventually") return asymptotic_status::HoldsEventually;
    if (s == "ViolatedEventually") return asymptotic_status::FailsEventually;
    if (s == "InconclusiveWithinCertifiedRadius")
        return asymptotic_status::InconclusiveWithinCertifiedRadius;
    throw parse_error(0, "unknown asymptotic verdict \"" + s + "\"");
}

inline json theorem_n_to_json(const theorem_n_report& r) {
    json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["chi_s"] = r.chi_s.str();
    j["lhs"] = plf_to_json(r.lhs);
    j["rhs"] = plf_to_json(r.rhs);
    j["margin"] = plf_to_json(r.slack);
    j["verdict"] = asymptotic_status_name(r.status);
    j["slack_slope"] = rat_json(plf_eventual_slope(r.slack));
    j["tilde_exact"] = r.tilde_exact;
    return j;
}

inline theorem_n_report theorem_n_from_json(const json& j) {
    theorem_n_report r;
    r.n = j.at("n").get<long>();
    r.s = j.at("s").get<long>();
    r.chi_s = bigint(j.at("chi_s").get<std::string>());
    r.lhs = plf_from_json(j.at("lhs"));
    r.rhs = plf_from_json(j.at("rhs"));
    r.slack = plf_from_json(j.at("margin"));
    r.status = asymptotic_status_parse(j.at("verdict").get<std::string>());
    r.tilde_exact = j.value("tilde_exact", true);
    return r;
}

// ---------------------------------------------------------------------------
// Condition reports of the verdict engine.
// ---------------------------------------------------------------------------

inline const char* m_status_name(m_status s) {
    switch (s) {
        case m_status::yes: return "Yes";
        case m_status::no: return "No";
        case m_status::yes_at_precision: return "YesAtPrecision";
        case m_status::inconclusive: return "Inconclusive";
    }
    return "?";
}

inline m_status m_status_parse(const std::string& s) {
    if (s == "Yes") return m_status::yes;
    if (s == "No") return m_status::no;
    if (s == "YesAtPrecision") return m_status::yes_at_precision;
    if (s == "Inconclusive") return m_status::inconclusive;
    throw parse_error(0, "unknown condition status \"" + s + "\"");
}

template <valued_field F>
json cond_m_to_json(const F& k, const cond_m_report<F>& rep) {
    json j;
    j["satisfied"] = m_status_name(rep.satisfied);
    j["failing_clause"] = rep.failing_clause;
    j["reason"] = rep.reason;
    j["k"] = rep.k;
    json pts = json::array();
    for (const auto& [c, m] : rep.critical_points.roots)
        pts.push_back({{"point", k.to_string(c)}, {"multiplicity", m}});
    j["critical_points"] = std::move(pts);
    json unres = json::array();
    for (const auto& [f, m] : rep.critical_points.unresolved)
        unres.push_back({{"factor", poly_to_string(k, f)}, {"multiplicity", m}});
    j["unresolved_factors"] = std::move(unres);
    j["complete"] = rep.critical_points.complete;
    json vals = json::array();
    for (const auto& v : rep.critical_values) vals.push_back(k.to_string(v));
    j["critical_values"] = std::move(vals);
    json checks = json::array();
    for (const auto& g : rep.guard_checks) {
        json c;
        c["index"] = g.index;
        c["identically_zero"] = g.identically_zero;
        c["roots_enumerated"] = g.roots_enumerated;
        json zs = json::array();
        for (const auto& z : g.zeros) zs.push_back(k.to_string(z));
        c["zeros"] = std::move(zs);
        json qs = json::array();
        for (const auto& q : g.q_at) qs.push_back(k.to_string(q));
        c["q_at"] = std::move(qs);
        c["w_nonzero"] = g.w_nonzero;
        c["value_avoided"] = g.value_avoided;
        c["certificate"] = g.certificate;
        checks.push_back(std::move(c));
    }
    j["d_checks"] = std::move(checks);
    j["monic_normalization_note"] = rep.monic_note;
    return j;
}

template <valued_field F>
cond_m_report<F> cond_m_from_json(const F& k, const json& j) {
    cond_m_report<F> rep;
    rep.satisfied = m_status_parse(j.at("satisfied").get<std::string>());
    rep.failing_clause = j.at("failing_clause").get<int>();
    rep.reason = j.at("reason").get<std::string>();
    rep.k = j.at("k").get<long>();
    for (const auto& p : j.at("critical_points"))
        rep.critical_points.roots.push_back(
            {parse_element(k, p.at("point").get<std::string>()),
             p.at("multiplicity").get<long>()});
    for (const auto& u : j.at("unresolved_factors")) {
        auto f = parse_ratmap(k, u.at("factor").get<std::string>());
        rep.critical_points.unresolved.push_back({f.num, u.at("multiplicity").get<long>()});
    }
    rep.critical_points.complete = j.at("complete").get<bool>();
    for (const auto& v : j.at("critical_values"))
        rep.critical_values.push_back(parse_element(k, v.get<std::string>()));
    for (const auto& c : j.at("d_checks")) {
        guard_check<F> g;
        g.index = c.at("index").get<long>();
        g.identically_zero = c.at("identically_zero").get<bool>();
        g.roots_enumerated = c.at("roots_enumerated").get<bool>();
        for (const auto& z : c.at("zeros")) g.zeros.push_back(parse_element(k, z.get<std::string>()));
        for (const auto& q : c.at("q_at")) g.q_at.push_back(parse_element(k, q.get<std::string>()));
        g.w_nonzero = c.at("w_nonzero").get<bool>();
        g.value_avoided = c.at("value_avoided").get<bool>();
        g.certificate = c.at("certificate").get<std::string>();
        rep.guard_checks.push_back(std::move(g));
    }
    rep.monic_note = j.at("monic_normalization_note").get<std::string>();
    return rep;
}

// ---------------------------------------------------------------------------
// Verdicts.
// ---------------------------------------------------------------------------

inline verdict_setting verdict_setting_parse(const std::string& s) {
    for (auto v : {verdict_setting::entire_on_k, verdict_setting::analytic_unbounded_disk,
                   verdict_setting::mero_on_k, verdict_setting::mero_unbounded_disk,
                   verdict_setting::entire_value_count, verdict_setting::entire_forced_constant})
        if (s == verdict_setting_name(v)) return v;
    throw parse_error(0, "unknown verdict setting \"" + s + "\"");
}

inline json verdict_to_json(const verdict& v) {
    json j;
    j["setting"] = verdict_setting_name(v.setting);
    j["conclusion"] = v.ruled_out ? std::string("RuledOut")
                                  : "Inconclusive(" + v.reason + ")";
    json tr;
    tr["p"] = v.trace.p;
    tr["q"] = v.trace.q;
    tr["k"] = v.trace.k;
    tr["s"] = v.trace.s;
    tr["theta"] = v.trace.theta;
    tr["gammaW"] = v.trace.gamma_w;
    tr["lambda"] = {{"case", v.trace.lambda_case}, {"value", rat_json(v.trace.lambda)}};
    tr["inequality"] = {{"lhs", rat_json(v.trace.lhs)},
                        {"rhs", rat_json(v.trace.rhs)},
                        {"relation", v.trace.relation},
                        {"holds", v.trace.relation_holds}};
    tr["notes"] = v.trace.notes;
    j["trace"] = std::move(tr);
    return j;
}

inline verdict verdict_from_json(const json& j) {
    verdict v;
    v.setting = verdict_setting_parse(j.at("setting").get<std::string>());
    std::string c = j.at("conclusion").get<std::string>();
    if (c == "RuledOut") {
        v.ruled_out = true;
    } else if (c.starts_with("Inconclusive(") && c.ends_with(")")) {
        v.ruled_out = false;
        v.reason = c.substr(13, c.size() - 14);
    } else {
        throw parse_error(0, "unknown conclusion \"" + c + "\"");
    }
    const json& tr = j.at("trace");
    v.trace.p = tr.at("p").get<long>();
    v.trace.q = tr.at("q").get<long>();
    v.trace.k = tr.at("k").get<long>();
    v.trace.s = tr.at("s").get<std::vector<long>>();
    v.trace.theta = tr.at("theta").get<long>();
    v.trace.gamma_w = tr.at("gammaW").get<long>();
    v.trace.lambda_case = tr.at("lambda").at("case").get<int>();
    v.trace.lambda = rat_unjson(tr.at("lambda").at("value"));
    v.trace.lhs = rat_unjson(tr.at("inequality").at("lhs"));
    v.trace.rhs = rat_unjson(tr.at("inequality").at("rhs"));
    v.trace.relation = tr.at("inequality").at("relation").get<std::string>();
    v.trace.relation_holds = tr.at("inequality").at("holds").get<bool>();
    v.trace.notes = tr.at("notes").get<std::vector<std::string>>();
    return v;
}

// ---------------------------------------------------------------------------
// Field descriptions: {"char": 0, "p": 5, "ext": {"gen": "s",
// "minpoly": "x^2-3", "val": "0"}}.  char p > 0 selects the T-adic function
// field of that characteristic; extensions are supported over the
// characteristic zero base.
// ---------------------------------------------------------------------------

struct field_spec {
    unsigned characteristic = 0;
    bigint p = 5;
    bool has_ext = false;
    std::string gen;
    std::string minpoly;
    rat gen_val = 0;
    bool declared_irreducible = false;
};

inline field_spec field_spec_from_json(const json& j) {
    field_spec fs;
    fs.characteristic = j.value("char", 0u);
    if (j.contains("p"))
        fs.p = j.at("p").is_string() ? bigint(j.at("p").get<std::string>())
                                     : bigint(j.at("p").get<long>());
    else if (fs.characteristic > 0)
        fs.p = fs.characteristic;
    else
        throw field_error("field description needs a prime p");
    if (fs.characteristic > 0 && fs.p != fs.characteristic)
        throw field_error("in positive characteristic the valuation base equals char");
    if (j.contains("ext")) {
        const json& e = j.at("ext");
        fs.has_ext = true;
        fs.gen = e.at("gen").get<std::string>();
        fs.minpoly = e.at("minpoly").get<std::string>();
        fs.gen_val = e.contains("val") ? rat_unjson(e.at("val")) : rat(0);
        fs.declared_irreducible = e.value("declared_irreducible", false);
    }
    return fs;
}

inline json field_spec_to_json(const field_spec& fs) {
    json j;
    j["char"] = fs.characteristic;
    j["p"] = static_cast<long>(fs.p);
    if (fs.has_ext) {
        json e;
        e["gen"] = fs.gen;
        e["minpoly"] = fs.minpoly;
        e["val"] = rat_json(fs.gen_val);
        if (fs.declared_irreducible) e["declared_irreducible"] = true;
        j["ext"] = std::move(e);
    }
    return j;
}

// Runs fn with the concrete field the description selects.  fn must accept
// any of the three field types (generic lambda) and return one type.
template <typename Fn>
auto with_field(const field_spec& fs, Fn&& fn) {
    if (fs.characteristic > 0) {
        if (fs.has_ext)
            throw field_error("extensions are supported over the characteristic zero base only");
        tadic_functions k(static_cast<unsigned>(fs.characteristic));
        return fn(k);
    }
    padic_rationals base(fs.p);
    if (!fs.has_ext) return fn(base);
    auto mp = parse_ratmap(base, fs.minpoly);
    if (detail::ideg(mp.den) > 0)
        throw field_error("minimal polynomial must be a polynomial in x");
    simple_extension k(fs.p, fs.gen, mp.num.c, fs.gen_val, fs.declared_irreducible);
    return fn(k);
}

}  // namespace ultranev

#endif  // ULTRANEV_SERIALIZE_HPP
