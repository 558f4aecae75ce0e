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
// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <array>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "raaginf/raaginf.hpp"

namespace {

using namespace raaginf;

const std::size_t kJobs = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> issues;

    void check(bool cond, const std::string& what) {
        if (cond) return;
        pass = false;
        if (issues.size() < 5) issues.push_back(what);
    }
};

std::vector<Graph> classes_upto(std::size_t n) {
    std::vector<Graph> out;
    for (const auto& level : enumerate_graphs_upto(n)) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool adjacent_or_equal(const Graph& g, Vertex a, Vertex b) { return a == b || g.adjacent(a, b); }

// lk(v) inside st(w), by direct loops.
bool dominated_directly(const Graph& g, Vertex v, Vertex w) {
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.adjacent(v, u) && !adjacent_or_equal(g, w, u)) return false;
    return true;
}

bool disjoint_union_of_cliques(const Graph& g) {
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < g.order(); ++b)
            for (Vertex c = 0; c < g.order(); ++c)
                if (a != c && g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c)) return false;
    return true;
}

void criterion1(Outcome& o) {
    const std::vector<Graph> graphs = classes_upto(7);
    const std::vector<Certificate> certs = certify_all(graphs, kJobs);
    const auto audits = parallel_map(certs, [](const Certificate& c) { return audit(c).ok(); }, kJobs);
    std::size_t rinf = 0, abelian = 0, undecided = 0, bad_audit = 0, complete = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const bool k = is_complete(graphs[i]);
        complete += k;
        const Verdict v = certs[i].verdict;
        rinf += v == Verdict::Rinf;
        abelian += v == Verdict::NotRinfAbelian;
        undecided += v == Verdict::Undecided;
        bad_audit += !audits[i];
        o.check(v == (k ? Verdict::NotRinfAbelian : Verdict::Rinf), "unexpected verdict for " + to_graph6(graphs[i]));
    }
    o.check(graphs.size() == 1252, "class count");
    o.check(complete == 7, "complete graph count");
    o.check(rinf == 1245 && abelian == 7 && undecided == 0, "tally");
    o.check(bad_audit == 0, "audit failures");
    o.detail << graphs.size() << " classes: RINF " << rinf << ", NOT_RINF_ABELIAN " << abelian << ", UNDECIDED "
             << undecided << ", audit failures " << bad_audit;
}

void criterion2(Outcome& o) {
    std::vector<Graph> graphs = classes_upto(5);
    o.check(graphs.size() == 52, "52 classes with n <= 5");
    std::mt19937_64 rng(20260101);
    for (int t = 0; t < 200; ++t) graphs.push_back(oracle::random_graph(rng, t % 2 == 0 ? 6 : 7));
    const auto ok = parallel_map(
        graphs,
        [](const Graph& g) {
            const TraceMonoid tm(g);
            for (std::size_t l = 1; l <= 3; ++l) {
                const auto a = tm.closed_form_le(l), b = tm.enumerate_lyndon(l);
                if (std::set<TraceClass>(a.begin(), a.end()) != std::set<TraceClass>(b.begin(), b.end())) return false;
            }
            return true;
        },
        kJobs);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        mismatches += !ok[i];
        o.check(ok[i], "closed form mismatch on " + to_graph6(graphs[i]));
    }
    o.detail << graphs.size() << " graphs x lengths 1..3, mismatches " << mismatches;
}

void criterion3(Outcome& o) {
    const std::vector<Graph> graphs = classes_upto(7);
    const auto ranks = parallel_map(graphs, [](const Graph& g) { return TraceMonoid(g).enumerate_lyndon(2).size(); }, kJobs);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const std::size_t n = graphs[i].order();
        const bool ok = ranks[i] == n * (n - 1) / 2 - graphs[i].edge_count();
        mismatches += !ok;
        o.check(ok, "rank L2 mismatch on " + to_graph6(graphs[i]));
    }
    o.detail << graphs.size() << " classes, mismatches " << mismatches;
}

void criterion4(Outcome& o) {
    for (std::size_t n : {2, 3}) {
        const auto ranks = lcs_ranks(Graph(n), 5);
        o.detail << "n=" << n << ":";
        for (std::size_t l = 1; l <= 5; ++l) {
            const long long expected = oracle::necklaces(static_cast<long long>(n), static_cast<long long>(l));
            o.detail << " " << ranks[l - 1];
            o.check(static_cast<long long>(ranks[l - 1]) == expected,
                    "n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
        o.detail << (n == 2 ? "; " : "");
    }
}

void criterion5(Outcome& o) {
    std::vector<Graph> graphs;
    for (const Graph& g : classes_upto(6))
        if (!is_complete(g)) graphs.push_back(g);
    const auto reports = parallel_map(graphs, [](const Graph& g) { return check_autnottrans_theorem(g); }, kJobs);
    std::size_t total = 0, failures = 0;
    std::array<std::size_t, 4> levels{};
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        total += reports[i].total;
        failures += reports[i].failures.size();
        for (std::size_t l = 0; l < 4; ++l) levels[l] += reports[i].by_level[l];
        o.check(reports[i].holds(), "counterexample on " + to_graph6(graphs[i]));
    }
    o.check(total == oracle::kSignedAutTotalUpTo6, "signed automorphism total");
    std::size_t complete_witnesses = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const SignedAut inversion{VertexPermutation::identity(n), std::vector<int>(n, -1)};
        const bool witness = has_eigenvalue_one(induced_matrix(complete_graph(n), inversion, 1));
        complete_witnesses += witness;
        o.check(!witness, "inversion on K" + std::to_string(n) + " has a level-1 witness");
    }
    o.detail << graphs.size() << " graphs, " << total << " signed automorphisms (L1 " << levels[1] << ", L2 "
             << levels[2] << ", L3 " << levels[3] << "), counterexamples " << failures
             << "; complete-graph inversions with level-1 witness " << complete_witnesses;
}

void criterion6(Outcome& o) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::bernoulli_distribution coin(0.5);
    std::size_t mismatches = 0, zero = 0;
    for (int t = 0; t < 1000; ++t) {
        std::vector<int> e(size(rng));
        int product = 1;
        for (int& s : e) {
            s = coin(rng) ? -1 : 1;
            product *= s;
        }
        const BigInt det = det_identity_minus(p_matrix(e));
        const bool ok = det == 1 - product;
        mismatches += !ok;
        zero += det == 0;
        o.check(ok, "sign vector of length " + std::to_string(e.size()));
    }
    o.detail << "1000 sign vectors, k <= 12, mismatches " << mismatches << " (det 0: " << zero << ", det 2: "
             << 1000 - zero << ")";
}

void criterion7(Outcome& o) {
    std::vector<Graph> graphs;
    std::map<std::string, std::vector<std::size_t>> found;
    for (const Graph& g : classes_upto(7))
        if (const auto p = srg_parameters(g)) {
            graphs.push_back(g);
            found[to_graph6(g)] = {p->n, p->k, p->lambda, p->mu};
        }
    std::map<std::string, std::vector<std::size_t>> reference;
    for (const auto& [g6, params] : oracle::kSrgUpTo7) reference[canonical_form(from_graph6(g6))] = params;
    o.check(found == reference, "srg list for n <= 7 differs from reference");
    graphs.push_back(petersen_graph());
    for (std::size_t n : {2, 3})
        for (std::size_t p : {2, 3}) graphs.push_back(complete_multipartite(std::vector<std::size_t>(p, n)));
    std::map<std::string, std::size_t> branches;
    for (const Graph& g : graphs) {
        const auto p = srg_parameters(g);
        o.check(p.has_value(), "not strongly regular: " + to_graph6(g));
        if (!p) continue;
        o.check((p->n - p->k - 1) * p->mu == p->k * (p->k - p->lambda - 1), "identity fails on " + to_graph6(g));
        const bool cliques = disjoint_union_of_cliques(g);
        const bool multipartite = disjoint_union_of_cliques(complement(g));
        const bool free = is_transvection_free_graph(g);
        o.check(cliques + multipartite + free == 1, "not exactly one class: " + to_graph6(g));
        std::string branch;
        if (p->lambda + 1 == p->k) {
            branch = "lambda=k-1";
            o.check(cliques, "lambda = k-1 without clique structure");
        } else if (p->mu == p->k) {
            branch = "mu=k";
            o.check(multipartite, "mu = k without multipartite structure");
        } else {
            branch = "transvection-free";
            o.check(free, "generic srg not transvection-free");
        }
        ++branches[branch];
    }
    o.detail << graphs.size() << " srgs:";
    for (const auto& [b, c] : branches) o.detail << " " << b << " " << c;
}

void criterion8(Outcome& o) {
    std::map<std::vector<std::size_t>, std::size_t> found;
    for (const Graph& g : classes_upto(7)) {
        const auto p = mba_parameters(g);
        if (!p) continue;
        const long long n = static_cast<long long>(p->n), k = static_cast<long long>(p->k),
                        d = static_cast<long long>(p->d), e = static_cast<long long>(g.edge_count());
        const std::string tag = to_graph6(g);
        ++found[{p->n, p->k, p->d}];
        o.check(n >= 5, "n < 5 on " + tag);
        o.check(n < 2 * k, "n >= 2k on " + tag);
        o.check(k + d >= n + 1, "k + d < n + 1 on " + tag);
        o.check(d * (2 * k - n) <= n * (2 * k - n) - k, "d > n - k/(2k-n) on " + tag);
        o.check(n * (n - 1) / 2 - k * (n - d - 1) <= e, "edge lower bound on " + tag);
        o.check(2 * e <= n * (d - 1) + k, "edge upper bound on " + tag);
        if (k == (n + 2) / 2) o.check(n % 2 == 0, "n odd with k = ceil((n+1)/2) on " + tag);
    }
    for (const std::vector<std::size_t>& need : {std::vector<std::size_t>{5, 4, 3}, {6, 4, 4}, {7, 5, 4}})
        o.check(found.count(need) == 1, "missing required parameter triple");
    o.check(found == oracle::kMbaCountsUpTo7, "parameter census differs from reference");
    std::size_t total = 0;
    for (const auto& [t, c] : found) total += c;
    o.detail << total << " MBA graphs, " << found.size() << " parameter triples:";
    for (const auto& [t, c] : found) o.detail << " (" << t[0] << "," << t[1] << "," << t[2] << ")x" << c;
}

void criterion9(Outcome& o) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> order(1, 7);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    std::size_t pairs = 0;
    for (int t = 0; t < 500; ++t) {
        const Graph g = oracle::random_graph(rng, order(rng), density(rng));
        const Vertex v = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
        const auto auts = automorphisms(g);
        const VertexSet s = v_char(g, v, auts);
        const std::string tag = to_graph6(g) + " v=" + std::to_string(v);
        o.check(s.contains(v), "v_char misses v on " + tag);
        o.check(is_characteristic_vertex_set(g, s, auts), "not characteristic on " + tag);
        for (const auto& p : auts) o.check(p.apply(s) == s, "not Aut-invariant on " + tag);
        for (Vertex a : s.members())
            for (Vertex b = 0; b < g.order(); ++b)
                if (a != b && dominated_directly(g, a, b)) o.check(s.contains(b), "not domination-closed on " + tag);
        ++pairs;
    }
    std::vector<Graph> free;
    for (const Graph& g : classes_upto(6))
        if (is_transvection_free_graph(g)) free.push_back(g);
    std::size_t checks = 0;
    for (const Graph& a : free) {
        o.check(is_transvection_free_graph(complement(a)), "complement of " + to_graph6(a));
        ++checks;
        for (const Graph& b : free) {
            o.check(is_transvection_free_graph(disjoint_union(a, b)), "union");
            o.check(is_transvection_free_graph(simplicial_join(a, b)), "join");
            checks += 2;
        }
    }
    o.detail << pairs << " (graph, vertex) pairs; " << free.size() << " transvection-free graphs, " << checks
             << " closure checks";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {1, "certify all classes n <= 7", criterion1},
        {2, "Lyndon closed forms, lengths 1-3", criterion2},
        {3, "rank L2 = C(n,2) - |E| for n <= 7", criterion3},
        {4, "edgeless ranks vs necklace counts", criterion4},
        {5, "signed automorphisms have an eigenvalue-1 level, n <= 6", criterion5},
        {6, "det(I - P(e)) = 1 - prod e", criterion6},
        {7, "strongly regular trichotomy", criterion7},
        {8, "max-by-abelian constraint battery", criterion8},
        {9, "characteristic closure properties", criterion9},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.issues.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail.str() << " ["
                  << std::fixed;
        std::cout.precision(1);
        std::cout << secs << "s]\n";
        for (const auto& i : o.issues) std::cout << "    " << i << "\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
