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
 // Soundness auditor for serialized certificates. It decodes each node's
 // graph6 and re-derives the rule hypotheses with its own adjacency-matrix
 // loops, sharing only the codec and isomorphism test with the engine.

#ifndef RAAGINF_AUDIT_HPP
#define RAAGINF_AUDIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "autgrp.hpp"
#include "certify.hpp"
#include "graph.hpp"
#include "graph_io.hpp"

namespace raaginf {

struct AuditReport {
    std::size_t nodes = 0;
    std::vector<std::string> problems;

    bool ok() const noexcept { return problems.empty(); }
};

namespace audit_detail {

using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(const Graph& g) {
    Adj a(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

inline Graph from_adjacency(const Adj& a) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t u = 0; u < a.size(); ++u)
        for (std::size_t v = u + 1; v < a.size(); ++v)
            if (a[u][v]) e.emplace_back(u, v);
    return Graph(a.size(), e);
}

inline Adj sub(const Adj& a, const std::vector<bool>& keep) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (keep[v]) idx.push_back(v);
    Adj out(idx.size(), std::vector<bool>(idx.size(), false));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = a[idx[i]][idx[j]];
    return out;
}

inline std::size_t deg(const Adj& a, std::size_t v) {
    std::size_t d = 0;
    for (bool b : a[v]) d += b;
    return d;
}

inline bool complete(const Adj& a) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (deg(a, v) + 1 != a.size()) return false;
    return true;
}

// Components of the graph (want = true) or of its complement (want = false).
inline std::vector<std::vector<bool>> components(const Adj& a, bool want = true) {
    const std::size_t n = a.size();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && a[u][v] == want && comp[v] < 0) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    std::vector<std::vector<bool>> out(static_cast<std::size_t>(count), std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) out[static_cast<std::size_t>(comp[v])][v] = true;
    return out;
}

inline bool connected(const Adj& a) { return components(a).size() <= 1; }

inline bool regular(const Adj& a) {
    for (std::size_t v = 1; v < a.size(); ++v)
        if (deg(a, v) != deg(a, 0)) return false;
    return true;
}

// lk(v) inside st(w)
inline bool dominated(const Adj& a, std::size_t v, std::size_t w) {
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a[v][x] && x != w && !a[w][x]) return false;
    return true;
}

inline bool transvection_free(const Adj& a) {
    if (a.size() == 1) return false;
    for (std::size_t v = 0; v < a.size(); ++v)
        for (std::size_t w = 0; w < a.size(); ++w)
            if (v != w && dominated(a, v, w)) return false;
    return true;
}

inline std::vector<bool> vmax(const Adj& a) {
    std::size_t d = 0;
    for (std::size_t v = 0; v < a.size(); ++v) d = std::max(d, deg(a, v));
    std::vector<bool> out(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) out[v] = deg(a, v) == d;
    return out;
}

inline std::vector<bool> negate(std::vector<bool> s) {
    s.flip();
    return s;
}

inline bool is_mba(const Adj& a) {
    if (!connected(a) || regular(a)) return false;
    return complete(sub(a, negate(vmax(a))));
}

inline std::vector<std::size_t> low_vertices(const Adj& a) {
    const auto m = vmax(a);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (!m[v]) out.push_back(v);
    return out;
}

inline std::vector<bool> link_of(const Adj& a, std::size_t v) { return a[v]; }

inline bool same_graph(const Graph& x, const Graph& y) {
    if (x.order() != y.order() || x.edge_count() != y.edge_count()) return false;
    if (x.order() <= kMaxSymmetryOrder) return canonical_form(x) == canonical_form(y);
    return to_graph6(x) == to_graph6(y);
}

inline std::size_t non_edges(const Adj& a) {
    std::size_t e = 0;
    for (std::size_t v = 0; v < a.size(); ++v) e += deg(a, v);
    return a.size() * (a.size() - 1) / 2 - e / 2;
}

// Domination-closed and invariant under every automorphism.
inline bool characteristic(const Graph& g, const Adj& a, const std::vector<bool>& s) {
    for (std::size_t v = 0; v < a.size(); ++v)
        for (std::size_t w = 0; w < a.size(); ++w)
            if (s[v] && !s[w] && dominated(a, v, w)) return false;
    for (const auto& p : automorphisms(g))
        for (std::size_t v = 0; v < a.size(); ++v)
            if (s[v] && !s[p(v)]) return false;
    return true;
}

class Auditor {
public:
    AuditReport report;

    void walk(const Json& j, const std::string& path) {
        ++report.nodes;
        Certificate c;
        Graph g;
        try {
            c = certificate_from_json(j);
            c.children.clear();
            g = from_graph6(c.graph6);
        } catch (const std::exception& e) {
            fail(path, std::string("malformed node: ") + e.what());
            return;
        }
        std::vector<Graph> kids;
        std::vector<Verdict> kid_verdicts;
        for (std::size_t i = 0; i < j.at("children").size(); ++i) {
            const Json& k = j.at("children")[i];
            try {
                kids.push_back(from_graph6(k.at("graph6").get<std::string>()));
                kid_verdicts.push_back(verdict_from_string(k.at("verdict").get<std::string>()));
            } catch (const std::exception& e) {
                fail(path, std::string("malformed child: ") + e.what());
                return;
            }
            walk(k, path + "/" + std::to_string(i));
        }
        check_node(c, g, kids, kid_verdicts, path);
    }

private:
    void fail(const std::string& path, const std::string& msg) { report.problems.push_back(path + ": " + msg); }

    void check_node(const Certificate& c, const Graph& g, const std::vector<Graph>& kids,
                    const std::vector<Verdict>& kv, const std::string& path) {
        const Adj a = adjacency(g);
        const std::size_t n = a.size();
        auto expect = [&](bool cond, const std::string& msg) {
            if (!cond) fail(path, to_string(c.rule) + ": " + msg);
        };
        for (const Graph& k : kids) {
            const Adj ka = adjacency(k);
            const bool smaller = ka.size() < n || (ka.size() == n && non_edges(ka) < non_edges(a));
            expect(smaller, "child does not decrease the measure");
        }
        auto one_rinf_child = [&]() {
            expect(kids.size() == 1, "expected exactly one child");
            expect(kids.size() == 1 && kv[0] == Verdict::Rinf, "child is not RINF");
        };
        auto quotient_child = [&](const std::vector<bool>& keep) {
            one_rinf_child();
            if (kids.size() != 1) return;
            const Adj q = sub(a, keep);
            expect(q.size() >= 2 && !complete(q), "quotient is complete or too small");
            expect(same_graph(from_adjacency(q), kids[0]), "child is not the claimed quotient");
        };

        if (c.rule == Rule::Abelian) {
            expect(c.verdict == Verdict::NotRinfAbelian, "verdict must be NOT_RINF_ABELIAN");
            expect(complete(a), "graph is not complete");
            expect(kids.empty(), "leaf has children");
            return;
        }
        if (c.rule == Rule::None) {
            expect(c.verdict == Verdict::Undecided, "verdict must be UNDECIDED");
            expect(kids.empty(), "leaf has children");
            return;
        }
        expect(c.verdict == Verdict::Rinf, "verdict must be RINF");
        expect(!complete(a), "complete graph certified RINF");

        switch (c.rule) {
            case Rule::Disconnected:
                expect(!connected(a), "graph is connected");
                expect(kids.empty(), "leaf has children");
                break;
            case Rule::TransvectionFree:
                expect(transvection_free(a), "graph is not transvection-free");
                expect(kids.empty(), "leaf has children");
                break;
            case Rule::Srg: check_srg(a, kids, kv, expect); break;
            case Rule::JoinFactor: check_join(a, kids, kv, expect); break;
            case Rule::RegularSmall: {
                const std::size_t k = n ? deg(a, 0) : 0;
                expect(regular(a), "graph is not regular");
                expect(k == 1 || k == 2 || k + 2 == n || k + 3 == n, "degree not in {1, 2, n-2, n-3}");
                expect(kids.empty(), "leaf has children");
                break;
            }
            case Rule::Simplification:
                expect(!regular(a), "graph is regular");
                quotient_child(negate(vmax(a)));
                break;
            case Rule::MbaKN1: {
                expect(is_mba(a), "graph is not max-by-abelian");
                const auto low = low_vertices(a);
                expect(low.size() == 1, "more than one non-maximal vertex");
                if (low.size() == 1) quotient_child(negate(link_of(a, low[0])));
                if (kids.size() == 1) expect(!connected(adjacency(kids[0])), "quotient is connected");
                break;
            }
            case Rule::MbaKN2Split: {
                expect(is_mba(a), "graph is not max-by-abelian");
                const auto low = low_vertices(a);
                expect(low.size() == 2, "not exactly two non-maximal vertices");
                if (low.size() != 2) break;
                const auto l1 = link_of(a, low[0]), l2 = link_of(a, low[1]);
                Adj plus = a;
                for (std::size_t v = 0; v < n; ++v) {
                    expect(l1[v] != l2[v], "links do not partition V");
                    for (std::size_t w = 0; w < n; ++w)
                        if (l1[v] && l2[w]) plus[v][w] = plus[w][v] = true;
                }
                one_rinf_child();
                if (kids.size() == 1) expect(same_graph(from_adjacency(plus), kids[0]), "child is not the cross-edge graph");
                break;
            }
            case Rule::MbaKN2Quotient: {
                expect(is_mba(a), "graph is not max-by-abelian");
                const auto low = low_vertices(a);
                expect(low.size() == 2, "not exactly two non-maximal vertices");
                if (low.size() != 2) break;
                const auto l1 = link_of(a, low[0]), l2 = link_of(a, low[1]), m = vmax(a);
                bool meet = false;
                for (std::size_t v = 0; v < n; ++v) meet = meet || (l1[v] && l2[v]);
                std::vector<bool> s(n);
                for (std::size_t v = 0; v < n; ++v) s[v] = meet ? (l1[v] && l2[v]) : (m[v] && (l1[v] || l2[v]));
                quotient_child(negate(s));
                break;
            }
            case Rule::CharClosureGeneric: check_generic(g, a, kids, kv, expect); break;
            default: expect(false, "unexpected rule"); break;
        }
    }

    template <class Expect>
    void check_srg(const Adj& a, const std::vector<Graph>& kids, const std::vector<Verdict>& kv, Expect& expect) {
        const std::size_t n = a.size();
        expect(regular(a), "graph is not regular");
        const std::size_t k = deg(a, 0);
        expect(k >= 1 && k + 1 < n, "degree outside 1 <= k < n-1");
        long lambda = -1, mu = -1;
        bool uniform = true;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                long common = 0;
                for (std::size_t w = 0; w < n; ++w) common += a[u][w] && a[v][w];
                long& slot = a[u][v] ? lambda : mu;
                if (slot < 0) slot = common;
                uniform = uniform && slot == common;
            }
        expect(uniform, "common-neighbour counts are not uniform");
        const long nk = static_cast<long>(n), kk = static_cast<long>(k);
        expect((nk - kk - 1) * mu == kk * (kk - lambda - 1), "parameter identity fails");
        if (mu == kk && lambda != kk - 1) {
            expect(kids.size() == 1 && kv[0] == Verdict::Rinf, "multipartite branch needs one RINF part");
            if (kids.size() == 1) expect(same_graph(Graph(n - k), kids[0]), "child is not an edgeless part");
        } else {
            expect(kids.empty(), "leaf has children");
        }
    }

    template <class Expect>
    void check_join(const Adj& a, const std::vector<Graph>& kids, const std::vector<Verdict>& kv, Expect& expect) {
        const std::size_t n = a.size();
        std::vector<bool> rest(n);
        std::size_t d = 0;
        for (std::size_t v = 0; v < n; ++v) {
            rest[v] = deg(a, v) + 1 != n;
            d += !rest[v];
        }
        const Adj core = sub(a, rest);
        const auto parts = components(core, false);
        expect(d >= 1 || parts.size() >= 2, "join decomposition is trivial");
        std::vector<Graph> factors;
        for (const auto& p : parts) {
            const Adj f = sub(core, p);
            if (!complete(f)) factors.push_back(from_adjacency(f));
        }
        expect(kids.size() == factors.size(), "children do not match the non-complete factors");
        std::vector<bool> used(factors.size(), false);
        bool any = false;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            bool matched = false;
            for (std::size_t f = 0; f < factors.size() && !matched; ++f)
                if (!used[f] && same_graph(factors[f], kids[i])) used[f] = matched = true;
            expect(matched, "child is not a join factor");
            any = any || kv[i] == Verdict::Rinf;
        }
        expect(any, "no RINF factor");
    }

    template <class Expect>
    void check_generic(const Graph& g, const Adj& a, const std::vector<Graph>& kids, const std::vector<Verdict>& kv,
                       Expect& expect) {
        const std::size_t n = a.size();
        expect(kids.size() == 1 && kv[0] == Verdict::Rinf, "expected exactly one RINF child");
        if (kids.size() != 1) return;
        expect(n <= kMaxSymmetryOrder || kids[0].order() < n, "graph too large to audit");
        if (n > kMaxSymmetryOrder) return;
        bool found = false;
        for (Mask s = 1; s + 1 < (Mask{1} << n) && !found; ++s) {
            std::vector<bool> in(n), keep(n);
            for (std::size_t v = 0; v < n; ++v) {
                in[v] = (s >> v) & 1;
                keep[v] = !in[v];
            }
            const Adj q = sub(a, keep);
            if (q.size() != kids[0].order() || q.size() < 2 || complete(q)) continue;
            const Graph qg = from_adjacency(q);
            if (qg.edge_count() != kids[0].edge_count() || !same_graph(qg, kids[0])) continue;
            found = characteristic(g, a, in);
        }
        expect(found, "no characteristic vertex set yields the child quotient");
    }
};

}  // namespace audit_detail

inline AuditReport audit(const Json& certificate) {
    audit_detail::Auditor a;
    a.walk(certificate, "");
    return a.report;
}

inline AuditReport audit(const Certificate& c) { return audit(to_json(c)); }

}  // namespace raaginf

#endif  // RAAGINF_AUDIT_HPP
