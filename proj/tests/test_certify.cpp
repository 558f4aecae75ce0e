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
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "raaginf/raaginf.hpp"

namespace raaginf {
namespace {

// Walks every node and checks the measure decreases along each edge.
void expect_measure_decreases(const Certificate& c) {
    const Graph g = from_graph6(c.graph6);
    const std::size_t ne = g.order() * (g.order() - 1) / 2 - g.edge_count();
    for (const Certificate& k : c.children) {
        const Graph h = from_graph6(k.graph6);
        const std::size_t ke = h.order() * (h.order() - 1) / 2 - h.edge_count();
        EXPECT_TRUE(h.order() < g.order() || (h.order() == g.order() && ke < ne)) << c.graph6 << " -> " << k.graph6;
        expect_measure_decreases(k);
    }
}

TEST(JoinDecompositionTest, Examples) {
    const JoinDecomposition c4 = max_join_decomposition(cycle_graph(4));
    EXPECT_EQ(c4.d, 0u);
    ASSERT_EQ(c4.factors.size(), 2u);
    for (const Graph& f : c4.factors) EXPECT_EQ(f, Graph(2));
    const JoinDecomposition p3 = max_join_decomposition(path_graph(3));
    EXPECT_EQ(p3.d, 1u);
    EXPECT_EQ(p3.centre, VertexSet::of(3, {1}));
    ASSERT_EQ(p3.factors.size(), 1u);
    EXPECT_EQ(p3.factors[0], Graph(2));
    const JoinDecomposition k4 = max_join_decomposition(complete_graph(4));
    EXPECT_EQ(k4.d, 4u);
    EXPECT_TRUE(k4.factors.empty());
    const JoinDecomposition c5 = max_join_decomposition(cycle_graph(5));
    EXPECT_FALSE(c5.nontrivial());
    EXPECT_THROW(max_join_decomposition(Graph()), InputError);
}

TEST(JoinDecompositionTest, ReassemblesTheGraph) {
    for (const auto& level : enumerate_graphs_upto(6))
        for (const Graph& g : level) {
            const JoinDecomposition jd = max_join_decomposition(g);
            Graph rebuilt = complete_graph(jd.d);
            for (const Graph& f : jd.factors) {
                EXPECT_TRUE(is_connected(complement(f)));
                rebuilt = rebuilt.empty() ? f : simplicial_join(rebuilt, f);
            }
            if (rebuilt.empty()) continue;
            EXPECT_TRUE(are_isomorphic(rebuilt, g)) << to_graph6(g);
        }
}

TEST(SimplifyTest, Examples) {
    const SimplificationResult fig = simplify(oracle::mba_5_4_3());
    EXPECT_EQ(fig.kind, TerminalKind::MaxByAbelian);
    EXPECT_EQ(fig.terminal, oracle::mba_5_4_3());
    const SimplificationResult c5 = simplify(cycle_graph(5));
    EXPECT_EQ(c5.kind, TerminalKind::ConnectedRegular);
    EXPECT_EQ(c5.trace.size(), 1u);
    const SimplificationResult p3 = simplify(path_graph(3));
    EXPECT_EQ(p3.kind, TerminalKind::Disconnected);
    EXPECT_EQ(p3.terminal, Graph(2));
    ASSERT_EQ(p3.trace.size(), 2u);
    EXPECT_EQ(p3.trace.front(), path_graph(3));
    EXPECT_THROW(simplify(complete_graph(3)), InputError);
    EXPECT_EQ(to_string(TerminalKind::MaxByAbelian), "max-by-abelian");
}

TEST(SimplifyTest, TerminalsAreNonCompleteAndCategorised) {
    for (const auto& level : enumerate_graphs_upto(6))
        for (const Graph& g : level) {
            if (is_complete(g)) continue;
            const SimplificationResult r = simplify(g);
            EXPECT_FALSE(is_complete(r.terminal));
            EXPECT_EQ(r.trace.back(), r.terminal);
            switch (r.kind) {
                case TerminalKind::Disconnected: EXPECT_FALSE(is_connected(r.terminal)); break;
                case TerminalKind::ConnectedRegular:
                    EXPECT_TRUE(is_connected(r.terminal) && regularity_degree(r.terminal).has_value());
                    break;
                case TerminalKind::MaxByAbelian: EXPECT_TRUE(mba_parameters(r.terminal).has_value()); break;
            }
        }
}

TEST(MbaHelpersTest, SplitAndQuotientSets) {
    const Graph g1 = oracle::mba_6_4_4_join();
    const auto split = mba_split_graph(g1);
    ASSERT_TRUE(split.has_value());
    EXPECT_TRUE(are_isomorphic(*split, simplicial_join(disjoint_union(Graph(1), complete_graph(2)),
                                                       disjoint_union(Graph(1), complete_graph(2)))));
    EXPECT_FALSE(mba_quotient_set(g1).has_value());
    const Graph g2 = oracle::mba_7_5_4();
    EXPECT_FALSE(mba_split_graph(g2).has_value());
    ASSERT_TRUE(mba_quotient_set(g2).has_value());
    EXPECT_EQ(*mba_quotient_set(g2), VertexSet::of(7, {0}));
    EXPECT_FALSE(mba_split_graph(oracle::mba_5_4_3()).has_value());
    EXPECT_FALSE(mba_quotient_set(cycle_graph(5)).has_value());
}

TEST(MbaHelpersTest, SplitFactorsAreDisconnected) {
    for (const Graph& g : enumerate_graphs(7)) {
        const auto split = mba_split_graph(g);
        if (!split) continue;
        const std::vector<Vertex> low = max_degree_vertices(g).complement().members();
        EXPECT_FALSE(is_connected(induced(g, link(g, low[0]))));
        EXPECT_FALSE(is_connected(induced(g, link(g, low[1]))));
        EXPECT_GE(split->edge_count(), g.edge_count());
    }
}

TEST(CertifyTest, ReferenceExamples) {
    const Certificate c5 = certify(cycle_graph(5));
    EXPECT_EQ(c5.verdict, Verdict::Rinf);
    EXPECT_EQ(c5.rule, Rule::TransvectionFree);
    EXPECT_TRUE(c5.children.empty());

    const Certificate k3 = certify(complete_graph(3));
    EXPECT_EQ(k3.verdict, Verdict::NotRinfAbelian);
    EXPECT_EQ(k3.rule, Rule::Abelian);

    const Certificate pet = certify(petersen_graph());
    EXPECT_EQ(pet.verdict, Verdict::Rinf);
    EXPECT_EQ(pet.rule, Rule::TransvectionFree);

    const Certificate c4 = certify(cycle_graph(4));
    EXPECT_EQ(c4.verdict, Verdict::Rinf);
    EXPECT_EQ(c4.rule, Rule::Srg);
    ASSERT_EQ(c4.children.size(), 1u);
    EXPECT_EQ(c4.children[0].graph6, to_graph6(Graph(2)));
    EXPECT_EQ(c4.children[0].rule, Rule::Disconnected);

    const Certificate g1 = certify(oracle::mba_6_4_4_join());
    EXPECT_EQ(g1.verdict, Verdict::Rinf);
    EXPECT_EQ(g1.rule, Rule::JoinFactor);
    ASSERT_EQ(g1.children.size(), 2u);
    for (const Certificate& k : g1.children) {
        EXPECT_EQ(k.rule, Rule::Disconnected);
        EXPECT_TRUE(are_isomorphic(from_graph6(k.graph6), disjoint_union(Graph(1), complete_graph(2))));
    }
}

TEST(CertifyTest, MoreRules) {
    const Certificate p3 = certify(path_graph(3));
    EXPECT_EQ(p3.rule, Rule::JoinFactor);
    ASSERT_EQ(p3.children.size(), 1u);
    EXPECT_EQ(p3.children[0].graph6, "A?");

    const Certificate fig = certify(oracle::mba_5_4_3());
    EXPECT_EQ(fig.verdict, Verdict::Rinf);
    EXPECT_EQ(fig.rule, Rule::JoinFactor);
    ASSERT_EQ(fig.children.size(), 2u);

    const Graph n1 = from_graph6("EiKw");
    EXPECT_EQ(mba_parameters(n1), (MbaParameters{6, 5, 3}));
    const Certificate kn1 = certify(n1);
    EXPECT_EQ(kn1.verdict, Verdict::Rinf);
    EXPECT_EQ(kn1.rule, Rule::MbaKN1);
    ASSERT_EQ(kn1.children.size(), 1u);
    EXPECT_EQ(kn1.children[0].rule, Rule::Disconnected);

    const Certificate g2 = certify(oracle::mba_7_5_4());
    EXPECT_EQ(g2.verdict, Verdict::Rinf);
    EXPECT_EQ(g2.rule, Rule::MbaKN2Quotient);

    const Certificate c6 = certify(complement(cycle_graph(6)));
    EXPECT_EQ(c6.verdict, Verdict::Rinf);

    EXPECT_EQ(certify(Graph(1)).rule, Rule::Abelian);
    EXPECT_THROW(certify(Graph()), InputError);
}

TEST(CertifyTest, LargerThanSymmetryBudget) {
    const Certificate c12 = certify(cycle_graph(12));
    EXPECT_EQ(c12.rule, Rule::TransvectionFree);
    EXPECT_EQ(c12.graph6, to_graph6(cycle_graph(12)));
    const Certificate p12 = certify(path_graph(12));
    EXPECT_EQ(p12.verdict, Verdict::Rinf);
    EXPECT_TRUE(audit(p12).ok());
}

TEST(CertifyTest, AllSmallGraphsDecidedAndAudited) {
    for (const auto& level : enumerate_graphs_upto(6))
        for (const Graph& g : level) {
            const Certificate c = certify(g);
            EXPECT_EQ(c.verdict, is_complete(g) ? Verdict::NotRinfAbelian : Verdict::Rinf) << to_graph6(g);
            EXPECT_EQ(c.graph6, canonical_form(g));
            const AuditReport r = audit(c);
            EXPECT_TRUE(r.ok()) << to_graph6(g) << ": " << (r.problems.empty() ? "" : r.problems.front());
            EXPECT_EQ(r.nodes, certificate_size(c));
            expect_measure_decreases(c);
        }
}

TEST(CertifyTest, IsomorphismInvariant) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 2 + t % 8;
        const Graph g = oracle::random_graph(rng, n, 0.3 + 0.1 * (t % 5));
        const Graph h = relabel(g, VertexPermutation(oracle::random_permutation(rng, n)));
        const Certificate a = certify(g), b = certify(h);
        EXPECT_EQ(a.verdict, b.verdict);
        EXPECT_EQ(to_json(a), to_json(b));
    }
}

TEST(CertifyTest, BatchMatchesSequential) {
    const std::vector<Graph> graphs = enumerate_graphs(5);
    const auto par = certify_all(graphs, 4);
    ASSERT_EQ(par.size(), graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) EXPECT_EQ(to_json(par[i]), to_json(certify(graphs[i])));
}

TEST(JsonTest, FieldOrderAndRoundTrip) {
    const Certificate c = certify(cycle_graph(4));
    const Json j = to_json(c);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"verdict", "rule", "citation", "graph6", "children"}));
    EXPECT_EQ(j["verdict"], "RINF");
    EXPECT_EQ(j["rule"], "SRG");
    EXPECT_EQ(to_json(certificate_from_json(j)), j);
    EXPECT_EQ(certificate_size(c), 2u);
    EXPECT_EQ(certificate_depth(c), 2u);
    EXPECT_THROW(certificate_from_json(Json{{"verdict", "MAYBE"}}), InputError);
}

TEST(JsonTest, EnumNames) {
    for (Rule r : {Rule::Abelian, Rule::Disconnected, Rule::TransvectionFree, Rule::Srg, Rule::JoinFactor,
                   Rule::RegularSmall, Rule::Simplification, Rule::MbaKN1, Rule::MbaKN2Split, Rule::MbaKN2Quotient,
                   Rule::CharClosureGeneric, Rule::None})
        EXPECT_EQ(rule_from_string(to_string(r)), r);
    for (Verdict v : {Verdict::Rinf, Verdict::NotRinfAbelian, Verdict::Undecided})
        EXPECT_EQ(verdict_from_string(to_string(v)), v);
    EXPECT_EQ(to_string(Rule::MbaKN2Split), "MBA_K_N2_SPLIT");
    EXPECT_THROW(rule_from_string("R99"), InputError);
}

TEST(AuditTest, DetectsTampering) {
    Json c5 = to_json(certify(cycle_graph(5)));
    c5["rule"] = "DISCONNECTED";
    EXPECT_FALSE(audit(c5).ok());

    Json c4 = to_json(certify(cycle_graph(4)));
    c4["children"][0]["graph6"] = to_graph6(complete_graph(2));
    c4["children"][0]["rule"] = "ABELIAN";
    c4["children"][0]["verdict"] = "NOT_RINF_ABELIAN";
    EXPECT_FALSE(audit(c4).ok());

    Json k3 = to_json(certify(complete_graph(3)));
    k3["verdict"] = "RINF";
    EXPECT_FALSE(audit(k3).ok());

    Json p3 = to_json(certify(path_graph(3)));
    p3["children"][0]["graph6"] = to_graph6(path_graph(3));
    EXPECT_FALSE(audit(p3).ok());

    Json fig = to_json(certify(oracle::mba_5_4_3()));
    fig["rule"] = "SIMPLIFICATION";
    EXPECT_FALSE(audit(fig).ok());

    Json bad = to_json(certify(cycle_graph(5)));
    bad["graph6"] = "D!c";
    EXPECT_FALSE(audit(bad).ok());

    Json undecided = to_json(certify(cycle_graph(5)));
    undecided["rule"] = "NONE";
    EXPECT_FALSE(audit(undecided).ok());
    undecided["verdict"] = "UNDECIDED";
    EXPECT_TRUE(audit(undecided).ok());
}

TEST(AuditTest, CharacteristicSetsOfQuotientRules) {
    for (const Graph& g : enumerate_graphs(7)) {
        if (is_complete(g)) continue;
        const auto auts = automorphisms(g);
        if (!regularity_degree(g)) {
            EXPECT_TRUE(is_characteristic_vertex_set(g, max_degree_vertices(g), auts));
        }
        if (const auto s = mba_quotient_set(g)) {
            EXPECT_TRUE(is_characteristic_vertex_set(g, *s, auts)) << to_graph6(g);
        }
    }
}

}  // namespace
}  // namespace raaginf
