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

// Command line front end.  Reports go to stdout in json, csv, or pretty
// form; diagnostics go to stderr.  Exit codes: check-m 0 = satisfied,
// 1 = refuted, 2 = inconclusive or at-precision; verdict 0 = ruled out,
// 2 = inconclusive; theorem-n 0 = holds eventually, 1 = violated
// eventually, 2 = inconclusive within the certified radius; nev and zeros
// 0 on success.  Hard errors (parse, field, domain) exit 10.

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ultranev/serialize.hpp"

using namespace ultranev;

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string scalar_str(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void csv_rows(const json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            csv_rows(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) csv_rows(v, path + "[" + std::to_string(i++) + "]", os);
    } else {
        os << csv_escape(path) << "," << csv_escape(scalar_str(j)) << "\n";
    }
}

bool all_scalar(const json& a) {
    for (const auto& v : a)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

std::string inline_array(const json& a) {
    std::string s = "[";
    bool first = true;
    for (const auto& v : a) {
        if (!first) s += ", ";
        first = false;
        s += scalar_str(v);
    }
    return s + "]";
}

void pretty(const json& j, int ind, std::ostream& os) {
    std::string pad(static_cast<std::size_t>(ind), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& v = it.value();
            if (v.is_object() || (v.is_array() && !all_scalar(v))) {
                os << pad << it.key() << ":\n";
                pretty(v, ind + 2, os);
            } else if (v.is_array()) {
                os << pad << it.key() << ": " << inline_array(v) << "\n";
            } else {
                os << pad << it.key() << ": " << scalar_str(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || (v.is_array() && !all_scalar(v))) {
                os << pad << "-\n";
                pretty(v, ind + 2, os);
            } else if (v.is_array()) {
                os << pad << "- " << inline_array(v) << "\n";
            } else {
                os << pad << "- " << scalar_str(v) << "\n";
            }
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "csv") {
        std::cout << "key,value\n";
        csv_rows(j, "", std::cout);
    } else if (format == "pretty") {
        pretty(j, 0, std::cout);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

field_spec resolve_field(const std::string& field_arg, long p_opt) {
    if (!field_arg.empty()) {
        std::string text = field_arg;
        auto pos = text.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos || text[pos] != '{') {
            std::ifstream in(field_arg);
            if (!in) throw field_error("cannot open field description file " + field_arg);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        return field_spec_from_json(json::parse(text));
    }
    field_spec fs;
    if (p_opt > 0) fs.p = bigint(p_opt);
    return fs;
}

// Trial division; declared primes past the screening bound are accepted.
void validate_prime(const bigint& p) {
    if (p < 2) throw field_error("p must be a prime >= 2");
    if (p > 1000000000L) return;
    long n = static_cast<long>(p);
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) throw field_error("p = " + std::to_string(n) + " is not prime");
}

bool starts_with_bracket(const std::string& s) {
    auto pos = s.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && s[pos] == '[';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact value-distribution bookkeeping over nonarchimedean fields"};
    app.require_subcommand(1);

    std::string field_arg;
    long p_opt = 0;
    long order = 64;
    long precision = 24;
    std::string format = "json";
    std::string at;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", field_arg,
                        "field description: inline JSON or a path to a JSON file");
        sub->add_option("--p", p_opt, "prime of the default characteristic zero field");
        sub->add_option("--order", order, "series truncation order (>= 4)")
            ->check(CLI::Range(4L, 1000000L));
        sub->add_option("--precision", precision, "digit budget for approximate root mode")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "json, csv, or pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    auto* cm = app.add_subcommand("check-m",
                                  "verify the five-clause criterion on a pair of maps");
    std::string cm_p, cm_q;
    cm->add_option("P", cm_p, "source map expression")->required();
    cm->add_option("Q", cm_q, "target map expression")->required();
    add_common(cm);

    auto* vd = app.add_subcommand("verdict",
                                  "decide whether nonconstant solution pairs are ruled out");
    std::string vd_p, vd_q, setting;
    vd->add_option("P", vd_p, "source map expression")->required();
    vd->add_option("Q", vd_q, "target map expression")->required();
    vd->add_option("--setting", setting, "entire|disk|mero-k|mero-disk|thm214|cor216")
        ->required()
        ->check(CLI::IsMember({"entire", "disk", "mero-k", "mero-disk", "thm214", "cor216"}));
    add_common(vd);

    auto* nv = app.add_subcommand("nev", "counting functions of a series or divisor literal");
    std::string nv_lit;
    nv->add_option("literal", nv_lit, "series literal [a0,a1,...] @ n, or divisor words")
        ->required();
    nv->add_option("--at", at, "log-radius at which to additionally evaluate the bundle");
    add_common(nv);

    auto* tn = app.add_subcommand("theorem-n",
                                  "multi-target counting inequality for a series");
    std::string tn_lit;
    std::vector<std::string> alphas;
    tn->add_option("f", tn_lit, "series literal")->required();
    tn->add_option("--alpha", alphas, "target value expression (repeat per target)")
        ->required();
    add_common(tn);

    auto* zr = app.add_subcommand("zeros", "zero count of a series on a disk");
    std::string zr_lit;
    bool open_disk = false;
    zr->add_option("f", zr_lit, "series literal")->required();
    zr->add_option("--at", at, "log-radius of the disk")->required();
    zr->add_flag("--open", open_disk, "count on the open disk instead of the closed one");
    add_common(zr);

    CLI11_PARSE(app, argc, argv);

    try {
        field_spec fs = resolve_field(field_arg, p_opt);
        validate_prime(fs.p);

        if (cm->parsed()) {
            return with_field(fs, [&](const auto& k) -> int {
                auto pm = parse_ratmap(k, cm_p);
                auto qm = parse_ratmap(k, cm_q);
                auto rep = check_condition_m(k, pm, qm);
                emit(cond_m_to_json(k, rep), format);
                switch (rep.satisfied) {
                    case m_status::yes: return 0;
                    case m_status::no: return 1;
                    default: return 2;
                }
            });
        }
        if (vd->parsed()) {
            return with_field(fs, [&](const auto& k) -> int {
                auto pm = parse_ratmap(k, vd_p);
                auto qm = parse_ratmap(k, vd_q);
                verdict v;
                if (setting == "entire") v = verdict_entire(k, pm, qm)[0];
                else if (setting == "disk") v = verdict_entire(k, pm, qm)[1];
                else if (setting == "mero-k") v = verdict_mero(k, pm, qm)[0];
                else if (setting == "mero-disk") v = verdict_mero(k, pm, qm)[1];
                else if (setting == "thm214") v = verdict_entire_value_count(k, pm, qm);
                else v = verdict_entire_forced_constant(k, pm, qm);
                emit(verdict_to_json(v), format);
                return v.ruled_out ? 0 : 2;
            });
        }
        if (nv->parsed()) {
            auto finish = [&](const nev_bundle& b) -> int {
                json j = nev_to_json(b);
                if (!at.empty()) {
                    rat t = rat_from_string(at);
                    json e;
                    e["t"] = rat_json(t);
                    e["Z"] = rat_json(plf_eval(b.Z, t));
                    e["N"] = rat_json(plf_eval(b.N, t));
                    e["T"] = rat_json(plf_eval(b.T, t));
                    e["Zt"] = rat_json(plf_eval(b.Zt, t));
                    e["Nt"] = rat_json(plf_eval(b.Nt, t));
                    j["at"] = std::move(e);
                }
                emit(j, format);
                return 0;
            };
            if (starts_with_bracket(nv_lit)) {
                return with_field(fs, [&](const auto& k) -> int {
                    auto s = parse_series(k, nv_lit);
                    return finish(nev_analyze(k, mero_from_series(k, s)));
                });
            }
            return finish(nev_from_divisor(parse_divisor(nv_lit)));
        }
        if (tn->parsed()) {
            return with_field(fs, [&](const auto& k) -> int {
                using field_type = std::decay_t<decltype(k)>;
                auto s = parse_series(k, tn_lit);
                std::vector<typename field_type::elem> targets;
                for (const auto& a : alphas) targets.push_back(parse_element(k, a));
                auto rep = check_theorem_n(k, mero_from_series(k, s), targets);
                emit(theorem_n_to_json(rep), format);
                switch (rep.status) {
                    case asymptotic_status::HoldsEventually: return 0;
                    case asymptotic_status::FailsEventually: return 1;
                    default: return 2;
                }
            });
        }
        if (zr->parsed()) {
            return with_field(fs, [&](const auto& k) -> int {
                auto s = parse_series(k, zr_lit);
                rat t = rat_from_string(at);
                long n = count_zeros_disk(k, s, t, !open_disk);
                json j;
                j["t"] = rat_json(t);
                j["closed"] = !open_disk;
                j["count"] = n;
                emit(j, format);
                return 0;
            });
        }
        std::cerr << "error: no command dispatched\n";
        return 10;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    }
}
