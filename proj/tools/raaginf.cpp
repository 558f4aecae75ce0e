/* Copyright 2026 The raaginf Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Command-line front end: certify, enumerate, lyndon, ranks, autcheck, simplify.
 // Exit status is 0 on success, 2 if any certificate is UNDECIDED, 1 on error.

#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raaginf/raaginf.hpp"

namespace {

using raaginf::Graph;
using raaginf::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndecided = 2;
constexpr std::size_t kMaxAutcheckOrder = 7;

struct RunConfig {
    std::string input;
    std::string builtin;
    std::string out;
    std::string format = "json";
    std::size_t jobs = 1;
    std::size_t max_n = 0;
    std::size_t length = 0;
    std::size_t upto = 0;
    bool certify = false;
    bool audit = false;
};

// One graph per non-blank line; '#' starts a comment line.
std::vector<Graph> read_graphs(const RunConfig& cfg) {
    if (!cfg.builtin.empty()) return {raaginf::builtin_graph(cfg.builtin)};
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!cfg.input.empty() && cfg.input != "-") {
        file.open(cfg.input);
        if (!file) throw raaginf::InputError("cannot open input file '" + cfg.input + "'");
        in = &file;
    }
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        const auto body = raaginf::detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            out.push_back(raaginf::parse_graph_line(line));
        } catch (const raaginf::InputError& e) {
            throw raaginf::InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw raaginf::InputError("no input graphs");
    return out;
}

std::string join(const std::vector<std::size_t>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

Json report_header(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

struct Output {
    Json json;
    std::ostringstream text;
    int status = kExitOk;
};

void certify_batch(const RunConfig& cfg, const std::vector<Graph>& graphs, bool full, Output& o) {
    const auto certs = raaginf::certify_all(graphs, cfg.jobs);
    std::map<std::string, std::size_t> tally{{"RINF", 0}, {"NOT_RINF_ABELIAN", 0}, {"UNDECIDED", 0}};
    std::size_t audit_failures = 0;
    o.json["results"] = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& c = certs[i];
        const std::string verdict = raaginf::to_string(c.verdict);
        ++tally[verdict];
        Json r;
        r["input"] = raaginf::to_graph6(graphs[i]);
        r["n"] = graphs[i].order();
        r["verdict"] = verdict;
        r["rule"] = raaginf::to_string(c.rule);
        if (cfg.audit) {
            const auto rep = raaginf::audit(c);
            r["audit"] = rep.ok() ? "ok" : "failed";
            if (!rep.ok()) {
                ++audit_failures;
                r["audit_problems"] = rep.problems;
            }
        }
        if (full) r["certificate"] = raaginf::to_json(c);
        o.json["results"].push_back(r);
        o.text << raaginf::to_graph6(graphs[i]) << ' ' << verdict << ' ' << raaginf::to_string(c.rule);
        if (cfg.audit) o.text << ' ' << r["audit"].get<std::string>();
        o.text << '\n';
    }
    o.json["tally"] = tally;
    if (cfg.audit) o.json["audit_failures"] = audit_failures;
    o.text << "# RINF " << tally["RINF"] << " NOT_RINF_ABELIAN " << tally["NOT_RINF_ABELIAN"] << " UNDECIDED "
           << tally["UNDECIDED"];
    if (cfg.audit) o.text << " audit_failures " << audit_failures;
    o.text << '\n';
    if (tally["UNDECIDED"] > 0) o.status = kExitUndecided;
    if (audit_failures > 0) o.status = kExitError;
}

void run_certify(const RunConfig& cfg, Output& o) {
    o.json = report_header("certify");
    certify_batch(cfg, read_graphs(cfg), true, o);
}

void run_enumerate(const RunConfig& cfg, Output& o) {
    if (cfg.max_n < 1 || cfg.max_n > raaginf::kMaxEnumerationOrder)
        throw raaginf::ResourceError("--max-n must be in 1.." + std::to_string(raaginf::kMaxEnumerationOrder));
    o.json = report_header("enumerate");
    o.json["max_n"] = cfg.max_n;
    const auto levels = raaginf::enumerate_graphs_upto(cfg.max_n);
    std::vector<std::size_t> counts;
    std::vector<Graph> all;
    for (const auto& lv : levels) {
        counts.push_back(lv.size());
        all.insert(all.end(), lv.begin(), lv.end());
    }
    o.json["counts"] = counts;
    o.json["total"] = all.size();
    if (cfg.certify) {
        certify_batch(cfg, all, false, o);
    } else {
        o.json["graphs"] = Json::array();
        for (const auto& g : all) {
            o.json["graphs"].push_back(raaginf::to_graph6(g));
            o.text << raaginf::to_graph6(g) << '\n';
        }
    }
    o.text << "# counts " << join(counts, " ") << " total " << all.size() << '\n';
}

void run_lyndon(const RunConfig& cfg, Output& o) {
    o.json = report_header("lyndon");
    o.json["length"] = cfg.length;
    o.json["results"] = Json::array();
    for (const auto& g : read_graphs(cfg)) {
        const raaginf::TraceMonoid tm(g);
        const auto elems = tm.enumerate_lyndon(cfg.length);
        Json r;
        r["graph6"] = raaginf::to_graph6(g);
        r["count"] = elems.size();
        r["elements"] = Json::array();
        o.text << r["graph6"].get<std::string>() << " length " << cfg.length << " count " << elems.size() << '\n';
        for (const auto& m : elems) {
            const std::string bracket = tm.bracketing(m).to_string();
            r["elements"].push_back({{"word", raaginf::word_to_string(m.std)}, {"bracket", bracket}});
            o.text << "  " << raaginf::word_to_string(m.std) << ' ' << bracket << '\n';
        }
        o.json["results"].push_back(r);
    }
}

void run_ranks(const RunConfig& cfg, Output& o) {
    o.json = report_header("ranks");
    o.json["upto"] = cfg.upto;
    o.json["results"] = Json::array();
    for (const auto& g : read_graphs(cfg)) {
        const auto ranks = raaginf::lcs_ranks(g, cfg.upto);
        o.json["results"].push_back({{"graph6", raaginf::to_graph6(g)}, {"ranks", ranks}});
        o.text << raaginf::to_graph6(g) << ' ' << join(ranks, " ") << '\n';
    }
}

void run_autcheck(const RunConfig& cfg, Output& o) {
    o.json = report_header("autcheck");
    o.json["results"] = Json::array();
    bool all_hold = true;
    for (const auto& g : read_graphs(cfg)) {
        if (g.order() > kMaxAutcheckOrder)
            throw raaginf::ResourceError("autcheck is limited to " + std::to_string(kMaxAutcheckOrder) + " vertices");
        const auto rep = raaginf::check_autnottrans_theorem(g, cfg.jobs);
        Json r;
        r["graph6"] = raaginf::to_graph6(g);
        r["total"] = rep.total;
        r["witness_level_counts"] = {{"1", rep.by_level[1]}, {"2", rep.by_level[2]}, {"3", rep.by_level[3]}};
        r["failures"] = Json::array();
        for (const auto& a : rep.failures) r["failures"].push_back({{"perm", a.perm.image()}, {"signs", a.signs}});
        r["holds"] = rep.holds();
        all_hold = all_hold && rep.holds();
        o.json["results"].push_back(r);
        o.text << r["graph6"].get<std::string>() << " total " << rep.total << " L1 " << rep.by_level[1] << " L2 "
               << rep.by_level[2] << " L3 " << rep.by_level[3] << " failures " << rep.failures.size() << '\n';
    }
    if (!all_hold) o.status = kExitError;
}

void run_simplify(const RunConfig& cfg, Output& o) {
    o.json = report_header("simplify");
    o.json["results"] = Json::array();
    for (const auto& g : read_graphs(cfg)) {
        const auto s = raaginf::simplify(g);
        Json r;
        r["graph6"] = raaginf::to_graph6(g);
        r["terminal"] = raaginf::to_graph6(s.terminal);
        r["kind"] = raaginf::to_string(s.kind);
        r["trace"] = Json::array();
        for (const auto& t : s.trace) r["trace"].push_back(raaginf::to_graph6(t));
        o.json["results"].push_back(r);
        o.text << r["graph6"].get<std::string>() << " ->";
        for (const auto& t : s.trace) o.text << ' ' << raaginf::to_graph6(t);
        o.text << " [" << raaginf::to_string(s.kind) << "]\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide the R-infinity property of right-angled Artin groups by certificate"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "graph6 or edge-list lines, one graph per line ('-' for stdin)");
        sub->add_option("--builtin", cfg.builtin,
                        "cycle(n), complete(n), edgeless(n), path(n), complete_multipartite(a,b,...), petersen");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    };

    std::function<void(const RunConfig&, Output&)> action;

    auto* certify = app.add_subcommand("certify", "certify each input graph");
    add_input(certify);
    add_common(certify);
    certify->add_flag("--audit", cfg.audit, "re-check every certificate with the independent auditor");
    certify->callback([&] { action = run_certify; });

    auto* enumerate = app.add_subcommand("enumerate", "list isomorphism classes up to --max-n vertices");
    add_common(enumerate);
    enumerate->add_option("--max-n", cfg.max_n, "largest vertex count")->required();
    enumerate->add_flag("--certify", cfg.certify, "certify every class and tally verdicts");
    enumerate->add_flag("--audit", cfg.audit, "audit every certificate (with --certify)");
    enumerate->callback([&] { action = run_enumerate; });

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon elements of a given length with their bracketings");
    add_input(lyndon);
    add_common(lyndon);
    lyndon->add_option("--length", cfg.length, "word length")->required();
    lyndon->callback([&] { action = run_lyndon; });

    auto* ranks = app.add_subcommand("ranks", "ranks of the lower central series factors");
    add_input(ranks);
    add_common(ranks);
    ranks->add_option("--upto", cfg.upto, "largest factor index")->required();
    ranks->callback([&] { action = run_ranks; });

    auto* autcheck = app.add_subcommand("autcheck", "eigenvalue-1 witnesses for every signed automorphism");
    add_input(autcheck);
    add_common(autcheck);
    autcheck->callback([&] { action = run_autcheck; });

    auto* simplify = app.add_subcommand("simplify", "iterated V_max deletion trace");
    add_input(simplify);
    add_common(simplify);
    simplify->callback([&] { action = run_simplify; });

    CLI11_PARSE(app, argc, argv);

    try {
        Output o;
        action(cfg, o);
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file) throw raaginf::InputError("cannot open output file '" + cfg.out + "'");
            out = &file;
        }
        if (cfg.format == "json") *out << o.json.dump(2) << '\n';
        else *out << o.text.str();
        return o.status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
