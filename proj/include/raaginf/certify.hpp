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
 // The R-infinity rule engine. Each node of a certificate names the rule that
 // justifies it; reduction rules point at strictly smaller graphs whose
 // certificates carry the property back up through characteristic quotients,
 // join factors or edge-adding quotients.

#ifndef RAAGINF_CERTIFY_HPP
#define RAAGINF_CERTIFY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "autgrp.hpp"
#include "charclose.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "parallel.hpp"

namespace raaginf {

enum class Verdict { Rinf, NotRinfAbelian, Undecided };

enum class Rule {
    Abelian,
    Disconnected,
    TransvectionFree,
    Srg,
    JoinFactor,
    RegularSmall,
    Simplification,
    MbaKN1,
    MbaKN2Split,
    MbaKN2Quotient,
    CharClosureGeneric,
    None,
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Rinf: return "RINF";
        case Verdict::NotRinfAbelian: return "NOT_RINF_ABELIAN";
        case Verdict::Undecided: return "UNDECIDED";
    }
    throw std::logic_error("unknown verdict");
}

inline std::string to_string(Rule r) {
    switch (r) {
        case Rule::Abelian: return "ABELIAN";
        case Rule::Disconnected: return "DISCONNECTED";
        case Rule::TransvectionFree: return "TRANSVECTION_FREE";
        case Rule::Srg: return "SRG";
        case Rule::JoinFactor: return "JOIN_FACTOR";
        case Rule::RegularSmall: return "REGULAR_SMALL";
        case Rule::Simplification: return "SIMPLIFICATION";
        case Rule::MbaKN1: return "MBA_K_N1";
        case Rule::MbaKN2Split: return "MBA_K_N2_SPLIT";
        case Rule::MbaKN2Quotient: return "MBA_K_N2_QUOTIENT";
        case Rule::CharClosureGeneric: return "CHAR_CLOSURE_GENERIC";
        case Rule::None: return "NONE";
    }
    throw std::logic_error("unknown rule");
}

inline Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::Rinf, Verdict::NotRinfAbelian, Verdict::Undecided})
        if (to_string(v) == s) return v;
    throw InputError("unknown verdict '" + s + "'");
}

inline Rule rule_from_string(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(Rule::None); ++i)
        if (to_string(static_cast<Rule>(i)) == s) return static_cast<Rule>(i);
    throw InputError("unknown rule '" + s + "'");
}

struct Certificate {
    Verdict verdict = Verdict::Undecided;
    Rule rule = Rule::None;
    std::string citation;
    std::string graph6;
    std::vector<Certificate> children;
};

// ---------------------------------------------------------------------------
// Structural helpers

// g = K^d * (join of factors), each factor with connected complement.
struct JoinDecomposition {
    std::size_t d = 0;
    VertexSet centre;
    std::vector<VertexSet> factor_sets;  // in g's vertex indices
    std::vector<Graph> factors;

    bool nontrivial() const noexcept { return d >= 1 || factors.size() >= 2; }
};

inline JoinDecomposition max_join_decomposition(const Graph& g) {
    detail::check_nonempty(g);
    JoinDecomposition out;
    out.centre = centre_vertices(g);
    out.d = out.centre.size();
    const VertexSet rest = out.centre.complement();
    const std::vector<Vertex> rest_members = rest.members();
    const Graph core = induced(g, rest);
    for (const VertexSet& comp : connected_components(complement(core))) {
        Mask m = 0;
        for (Vertex i : comp.members()) m |= detail::bit(rest_members[i]);
        out.factor_sets.emplace_back(g.order(), m);
        out.factors.push_back(induced(core, comp));
    }
    return out;
}

enum class TerminalKind { Disconnected, ConnectedRegular, MaxByAbelian };

inline std::string to_string(TerminalKind k) {
    switch (k) {
        case TerminalKind::Disconnected: return "disconnected";
        case TerminalKind::ConnectedRegular: return "connected-regular";
        case TerminalKind::MaxByAbelian: return "max-by-abelian";
    }
    throw std::logic_error("unknown terminal kind");
}

struct SimplificationResult {
    Graph terminal;
    TerminalKind kind = TerminalKind::Disconnected;
    std::vector<Graph> trace;  // starts with the input, ends with terminal
};

// Repeatedly deletes V_max until the graph is disconnected, regular, or the
// deletion would leave a complete graph.
inline SimplificationResult simplify(const Graph& g) {
    detail::check_nonempty(g);
    if (is_complete(g)) throw InputError("simplification needs a non-complete graph");
    SimplificationResult r;
    Graph cur = g;
    while (true) {
        r.trace.push_back(cur);
        if (!is_connected(cur)) {
            r.kind = TerminalKind::Disconnected;
            break;
        }
        if (regularity_degree(cur)) {
            r.kind = TerminalKind::ConnectedRegular;
            break;
        }
        Graph next = induced(cur, max_degree_vertices(cur).complement());
        if (is_complete(next)) {
            r.kind = TerminalKind::MaxByAbelian;
            break;
        }
        cur = std::move(next);
    }
    r.terminal = cur;
    return r;
}

// Cross-edge graph of an (n, n-2, d)-max-by-abelian graph whose two
// non-maximal vertices have links partitioning V.
inline std::optional<Graph> mba_split_graph(const Graph& g) {
    const auto p = mba_parameters(g);
    if (!p || p->k + 2 != g.order()) return std::nullopt;
    const std::vector<Vertex> low = max_degree_vertices(g).complement().members();
    const VertexSet l1 = link(g, low[0]), l2 = link(g, low[1]);
    if (!(l1 & l2).empty() || (l1 | l2) != g.vertices()) return std::nullopt;
    return add_cross_edges(g, l1, l2);
}

// For (n, n-2, d)-max-by-abelian graphs without the split: the meet of the
// two links if non-empty, otherwise V_max meet their union.
inline std::optional<VertexSet> mba_quotient_set(const Graph& g) {
    const auto p = mba_parameters(g);
    if (!p || p->k + 2 != g.order() || mba_split_graph(g)) return std::nullopt;
    const std::vector<Vertex> low = max_degree_vertices(g).complement().members();
    const VertexSet l1 = link(g, low[0]), l2 = link(g, low[1]);
    return !(l1 & l2).empty() ? (l1 & l2) : (max_degree_vertices(g) & (l1 | l2));
}

// ---------------------------------------------------------------------------
// Citations

namespace detail {

inline std::string citation(Rule r) {
    switch (r) {
        case Rule::Abelian:
            return "complete graph: A_G is free abelian Z^n and -Id has finite Reidemeister number";
        case Rule::Disconnected:
            return "disconnected graph: A_G is a non-trivial free product and has R-infinity";
        case Rule::TransvectionFree:
            return "transvection-free graph: every automorphism induces eigenvalue 1 on L1, L2 or L3";
        case Rule::Srg:
            return "strongly regular graph: R-infinity by the lambda = k-1 / mu = k / transvection-free trichotomy";
        case Rule::JoinFactor:
            return "maximal join decomposition: A_G has R-infinity if the RAAG of some join factor does";
        case Rule::RegularSmall:
            return "k-regular graph with k in {1, 2, n-2, n-3}: R-infinity by structure of the complement";
        case Rule::Simplification:
            return "V_max generates a characteristic vertex subgroup; R-infinity lifts from the quotient";
        case Rule::MbaKN1:
            return "(n,n-1,d)-max-by-abelian: killing lk(v) of the non-maximal vertex leaves a free product";
        case Rule::MbaKN2Split:
            return "(n,n-2,d)-max-by-abelian with V = lk(v1) disjoint-union lk(v2): adding all cross edges is a "
                   "characteristic quotient";
        case Rule::MbaKN2Quotient:
            return "(n,n-2,d)-max-by-abelian: link intersection or V_max meet link union generates a "
                   "characteristic vertex subgroup with non-abelian quotient";
        case Rule::CharClosureGeneric:
            return "union of characteristic closures generates a characteristic vertex subgroup; R-infinity lifts "
                   "from the quotient";
        case Rule::None:
            return "no rule applies; conjecturally R-infinity";
    }
    throw std::logic_error("unknown rule");
}

inline std::string srg_branch(const SrgParameters& p) {
    std::string s = "srg(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) +
                    "," + std::to_string(p.mu) + "): ";
    if (p.lambda + 1 == p.k) return s + "lambda = k-1, disjoint union of complete graphs";
    if (p.mu == p.k) return s + "mu = k, complete multipartite";
    return s + "lambda < k-1 and mu < k, transvection-free";
}

inline std::string mba_tag(const MbaParameters& p) {
    return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + ")";
}

inline std::size_t non_edges(const Graph& g) { return g.order() * (g.order() - 1) / 2 - g.edge_count(); }

inline bool measure_less(const Graph& a, const Graph& b) {
    return a.order() != b.order() ? a.order() < b.order() : non_edges(a) < non_edges(b);
}

// Key graph for a node: canonical relabeling when symmetry search is affordable.
inline Graph node_graph(const Graph& g) { return g.order() <= kMaxSymmetryOrder ? canonical_graph(g) : g; }

class Certifier {
public:
    Certificate run(const Graph& input) { return node(node_graph(input)); }

private:
    Certificate node(const Graph& g) {
        const std::string key = to_graph6(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Certificate c = decide(g);
        c.graph6 = key;
        memo_.emplace(key, c);
        return c;
    }

    Certificate leaf(Verdict v, Rule r, std::string note = {}) {
        Certificate c;
        c.verdict = v;
        c.rule = r;
        c.citation = citation(r) + (note.empty() ? "" : "; " + note);
        return c;
    }

    Certificate child(const Graph& parent, const Graph& sub) {
        if (!measure_less(sub, parent)) throw std::logic_error("certificate reduction does not decrease the measure");
        return node(node_graph(sub));
    }

    // A characteristic-quotient style reduction to one smaller graph.
    std::optional<Certificate> reduce(const Graph& g, const Graph& sub, Rule r, std::string note = {}) {
        Certificate c = child(g, sub);
        if (c.verdict != Verdict::Rinf) return std::nullopt;
        Certificate out = leaf(Verdict::Rinf, r, std::move(note));
        out.children.push_back(std::move(c));
        return out;
    }

    static bool legal_quotient(const Graph& q) { return q.order() >= 2 && !is_complete(q); }

    Certificate decide(const Graph& g) {
        const std::size_t n = g.order();
        if (is_complete(g)) return leaf(Verdict::NotRinfAbelian, Rule::Abelian);
        if (!is_connected(g)) return leaf(Verdict::Rinf, Rule::Disconnected);
        if (is_transvection_free_graph(g)) return leaf(Verdict::Rinf, Rule::TransvectionFree);

        if (auto p = srg_parameters(g)) {
            Certificate c = leaf(Verdict::Rinf, Rule::Srg, srg_branch(*p));
            if (p->mu == p->k && p->lambda + 1 != p->k) c.children.push_back(child(g, Graph(n - p->k)));
            return c;
        }

        const JoinDecomposition jd = max_join_decomposition(g);
        if (jd.nontrivial()) {
            std::vector<Certificate> kids;
            bool any = false;
            for (const Graph& f : jd.factors) {
                if (is_complete(f)) continue;
                kids.push_back(child(g, f));
                any = any || kids.back().verdict == Verdict::Rinf;
            }
            if (any) {
                Certificate c = leaf(Verdict::Rinf, Rule::JoinFactor, "d = " + std::to_string(jd.d));
                c.children = std::move(kids);
                return c;
            }
        }

        const auto k = regularity_degree(g);
        if (k && (*k == 1 || *k == 2 || *k + 2 == n || *k + 3 == n))
            return leaf(Verdict::Rinf, Rule::RegularSmall, "k = " + std::to_string(*k));

        if (!k) {
            const Graph q = induced(g, max_degree_vertices(g).complement());
            if (legal_quotient(q))
                if (auto c = reduce(g, q, Rule::Simplification)) return *c;
        }

        if (auto p = mba_parameters(g)) {
            const std::vector<Vertex> lows = max_degree_vertices(g).complement().members();
            if (p->k + 1 == n) {
                const Graph q = induced(g, link(g, lows[0]).complement());
                if (legal_quotient(q))
                    if (auto c = reduce(g, q, Rule::MbaKN1, mba_tag(*p))) return *c;
            }
            if (auto split = mba_split_graph(g)) {
                if (split->edge_count() > g.edge_count())
                    if (auto c = reduce(g, *split, Rule::MbaKN2Split, mba_tag(*p))) return *c;
            } else if (auto s = mba_quotient_set(g)) {
                const Graph q = induced(g, s->complement());
                if (legal_quotient(q))
                    if (auto c = reduce(g, q, Rule::MbaKN2Quotient, mba_tag(*p))) return *c;
            }
        }

        std::vector<VertexSet> candidates;
        if (n <= kMaxSymmetryOrder) {
            const auto auts = automorphisms(g);
            for (Vertex v = 0; v < n; ++v) candidates.push_back(v_char(g, v, auts));
        }
        candidates.push_back(transvection_free_vertices(g));
        std::vector<Mask> tried;
        for (const VertexSet& s : candidates) {
            if (s.empty() || s == g.vertices()) continue;
            if (std::find(tried.begin(), tried.end(), s.mask()) != tried.end()) continue;
            tried.push_back(s.mask());
            const Graph q = induced(g, s.complement());
            if (!legal_quotient(q)) continue;
            if (auto c = reduce(g, q, Rule::CharClosureGeneric)) return *c;
        }

        return leaf(Verdict::Undecided, Rule::None);
    }

    std::map<std::string, Certificate> memo_;
};

}  // namespace detail

inline Certificate certify(const Graph& g) {
    detail::check_nonempty(g);
    return detail::Certifier().run(g);
}

inline std::vector<Certificate> certify_all(const std::vector<Graph>& graphs, std::size_t jobs = 1) {
    return parallel_map(graphs, [](const Graph& g) { return certify(g); }, jobs);
}

// ---------------------------------------------------------------------------
// Serialization

using Json = nlohmann::ordered_json;

inline Json to_json(const Certificate& c) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["rule"] = to_string(c.rule);
    j["citation"] = c.citation;
    j["graph6"] = c.graph6;
    j["children"] = Json::array();
    for (const auto& k : c.children) j["children"].push_back(to_json(k));
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    c.rule = rule_from_string(j.at("rule").get<std::string>());
    c.citation = j.at("citation").get<std::string>();
    c.graph6 = j.at("graph6").get<std::string>();
    for (const auto& k : j.at("children")) c.children.push_back(certificate_from_json(k));
    return c;
}

inline std::size_t certificate_size(const Certificate& c) {
    std::size_t s = 1;
    for (const auto& k : c.children) s += certificate_size(k);
    return s;
}

inline std::size_t certificate_depth(const Certificate& c) {
    std::size_t d = 0;
    for (const auto& k : c.children) d = std::max(d, certificate_depth(k));
    return d + 1;
}

}  // namespace raaginf

#endif  // RAAGINF_CERTIFY_HPP
