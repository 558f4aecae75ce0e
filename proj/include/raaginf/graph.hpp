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
 // Finite simple graphs stored as one 64-bit adjacency row per vertex, plus the
 // per-vertex and structural queries (links, domination, regularity, strongly
 // regular and max-by-abelian parameters) that the certification rules consume.

#ifndef RAAGINF_GRAPH_HPP
#define RAAGINF_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace raaginf {

using Vertex = std::size_t;
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

namespace detail {

constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

constexpr Mask full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline void check_order(std::size_t n) {
    if (n > kMaxVertices)
        throw InputError("graph has " + std::to_string(n) + " vertices; at most 64 are supported");
}

}  // namespace detail

// A subset of {0, ..., n-1} for a fixed universe size n.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::size_t universe, Mask mask) : universe_(universe), mask_(mask) {
        detail::check_order(universe);
        if ((mask & ~detail::full_mask(universe)) != 0)
            throw InputError("vertex set contains vertices outside 0..n-1");
    }

    static VertexSet none(std::size_t universe) { return {universe, 0}; }
    static VertexSet all(std::size_t universe) { return {universe, detail::full_mask(universe)}; }
    static VertexSet single(std::size_t universe, Vertex v) {
        if (v >= universe) throw InputError("vertex " + std::to_string(v) + " out of range");
        return {universe, detail::bit(v)};
    }
    static VertexSet of(std::size_t universe, const std::vector<Vertex>& vs) {
        Mask m = 0;
        for (Vertex v : vs) {
            if (v >= universe) throw InputError("vertex " + std::to_string(v) + " out of range");
            m |= detail::bit(v);
        }
        return {universe, m};
    }

    std::size_t universe() const noexcept { return universe_; }
    Mask mask() const noexcept { return mask_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(Vertex v) const noexcept { return v < universe_ && (mask_ & detail::bit(v)) != 0; }
    bool subset_of(const VertexSet& o) const noexcept { return (mask_ & ~o.mask_) == 0; }

    // Members in ascending order.
    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        return out;
    }

    VertexSet complement() const { return {universe_, detail::full_mask(universe_) & ~mask_}; }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) { return {a.universe_, a.mask_ | b.mask_}; }
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) { return {a.universe_, a.mask_ & b.mask_}; }
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b) { return {a.universe_, a.mask_ & ~b.mask_}; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    Mask mask_ = 0;
};

// Immutable finite simple graph. Vertex i's neighbours are the set bits of row(i).
// Equality compares adjacency only; labels are for display.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : rows_(n, 0), labels_(default_labels(n)) { detail::check_order(n); }

    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
            if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
            rows_[u] |= detail::bit(v);
            rows_[v] |= detail::bit(u);
        }
    }

    // Rows must be symmetric and loop-free.
    static Graph from_rows(std::vector<Mask> rows, std::vector<std::string> labels = {}) {
        const std::size_t n = rows.size();
        detail::check_order(n);
        for (Vertex v = 0; v < n; ++v) {
            if ((rows[v] & ~detail::full_mask(n)) != 0) throw InputError("adjacency row out of range");
            if (rows[v] & detail::bit(v)) throw InputError("self-loop at vertex " + std::to_string(v));
            for (Mask m = rows[v]; m != 0; m &= m - 1) {
                const auto w = static_cast<Vertex>(std::countr_zero(m));
                if (!(rows[w] & detail::bit(v))) throw InputError("adjacency is not symmetric");
            }
        }
        if (labels.empty()) labels = default_labels(n);
        if (labels.size() != n) throw InputError("label count does not match vertex count");
        Graph g;
        g.rows_ = std::move(rows);
        g.labels_ = std::move(labels);
        return g;
    }

    std::size_t order() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (Mask r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
        return twice / 2;
    }

    Mask row(Vertex v) const { return rows_.at(v); }
    const std::vector<Mask>& rows() const noexcept { return rows_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool adjacent(Vertex u, Vertex v) const { return (rows_.at(u) & detail::bit(v)) != 0; }

    VertexSet vertices() const { return VertexSet::all(order()); }

    // (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = u + 1; v < order(); ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    static std::vector<std::string> default_labels(std::size_t n) {
        std::vector<std::string> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
        return out;
    }

    std::vector<Mask> rows_;
    std::vector<std::string> labels_;
};

namespace detail {

inline void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " out of range for graph on " +
                         std::to_string(g.order()) + " vertices");
}

inline void check_nonempty(const Graph& g) {
    if (g.empty()) throw InputError("the empty graph is not a valid input");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-vertex queries

struct Neighborhood {
    VertexSet link;
    VertexSet star;
    std::size_t degree = 0;
};

inline VertexSet link(const Graph& g, Vertex v) {
    detail::check_vertex(g, v);
    return {g.order(), g.row(v)};
}

inline VertexSet star(const Graph& g, Vertex v) {
    detail::check_vertex(g, v);
    return {g.order(), g.row(v) | detail::bit(v)};
}

inline std::size_t degree(const Graph& g, Vertex v) {
    detail::check_vertex(g, v);
    return static_cast<std::size_t>(std::popcount(g.row(v)));
}

inline Neighborhood neighborhoods(const Graph& g, Vertex v) {
    return {link(g, v), star(g, v), degree(g, v)};
}

// w dominates v iff lk(v) is contained in st(w); only defined for v != w.
inline bool dominates(const Graph& g, Vertex v, Vertex w) {
    detail::check_vertex(g, v);
    detail::check_vertex(g, w);
    if (v == w) throw InputError("domination is only defined for distinct vertices");
    return (g.row(v) & ~(g.row(w) | detail::bit(w))) == 0;
}

// Unchecked variant for inner loops.
namespace detail {
inline bool dominated_by(const Graph& g, Vertex v, Vertex w) noexcept {
    return (g.rows()[v] & ~(g.rows()[w] | bit(w))) == 0;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Graph operations

enum class ComposeMode { DisjointUnion, SimplicialJoin };

// Vertices of a keep their indices; b's are shifted by a.order().
inline Graph compose(const Graph& a, const Graph& b, ComposeMode mode) {
    const std::size_t na = a.order(), nb = b.order(), n = na + nb;
    detail::check_order(n);
    std::vector<Mask> rows(n, 0);
    const Mask a_all = detail::full_mask(na);
    const Mask b_all = detail::full_mask(n) & ~a_all;
    for (Vertex v = 0; v < na; ++v) {
        rows[v] = a.row(v);
        if (mode == ComposeMode::SimplicialJoin) rows[v] |= b_all;
    }
    for (Vertex v = 0; v < nb; ++v) {
        rows[na + v] = b.row(v) << na;
        if (mode == ComposeMode::SimplicialJoin) rows[na + v] |= a_all;
    }
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return Graph::from_rows(std::move(rows), std::move(labels));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) { return compose(a, b, ComposeMode::DisjointUnion); }
inline Graph simplicial_join(const Graph& a, const Graph& b) { return compose(a, b, ComposeMode::SimplicialJoin); }

inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Mask> rows(n);
    for (Vertex v = 0; v < n; ++v) rows[v] = detail::full_mask(n) & ~g.row(v) & ~detail::bit(v);
    return Graph::from_rows(std::move(rows), g.labels());
}

// Subgraph induced on keep; kept vertices retain their relative order.
inline Graph induced(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order()) throw InputError("vertex set belongs to a graph of a different order");
    const std::vector<Vertex> kept = keep.members();
    std::vector<Mask> rows(kept.size(), 0);
    std::vector<std::string> labels;
    labels.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        labels.push_back(g.labels()[kept[i]]);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j])) rows[i] |= detail::bit(j);
    }
    return Graph::from_rows(std::move(rows), std::move(labels));
}

// Adds every edge between the two sets (which must be disjoint).
inline Graph add_cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if ((a & b).mask() != 0) throw InputError("cross-edge sets must be disjoint");
    std::vector<Mask> rows = g.rows();
    for (Vertex v : a.members()) rows[v] |= b.mask();
    for (Vertex v : b.members()) rows[v] |= a.mask();
    return Graph::from_rows(std::move(rows), g.labels());
}

// ---------------------------------------------------------------------------
// Structural queries

inline std::vector<VertexSet> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> out;
    Mask unseen = detail::full_mask(n);
    while (unseen != 0) {
        Mask comp = unseen & (~unseen + 1);
        Mask frontier = comp;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask m = frontier; m != 0; m &= m - 1) next |= g.row(static_cast<Vertex>(std::countr_zero(m)));
            frontier = next & ~comp;
            comp |= next;
        }
        out.emplace_back(n, comp);
        unseen &= ~comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_complete(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.row(v) != (detail::full_mask(g.order()) & ~detail::bit(v))) return false;
    return true;
}

inline std::optional<std::size_t> regularity_degree(const Graph& g) {
    if (g.empty()) return std::nullopt;
    const std::size_t k = degree(g, 0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (degree(g, v) != k) return std::nullopt;
    return k;
}

inline std::size_t max_degree(const Graph& g) {
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, degree(g, v));
    return d;
}

inline VertexSet max_degree_vertices(const Graph& g) {
    const std::size_t d = max_degree(g);
    Mask m = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (degree(g, v) == d) m |= detail::bit(v);
    return {g.order(), m};
}

// Vertices adjacent to every other vertex; they generate the centre of the group.
inline VertexSet centre_vertices(const Graph& g) {
    Mask m = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (degree(g, v) + 1 == g.order()) m |= detail::bit(v);
    return {g.order(), m};
}

struct StructureFlags {
    std::vector<VertexSet> connected_components;
    bool is_complete = false;
    bool is_regular = false;
    std::optional<std::size_t> regularity_degree;
    std::size_t max_degree = 0;
    VertexSet v_max;
    VertexSet centre_vertices;
};

inline StructureFlags structure_flags(const Graph& g) {
    detail::check_nonempty(g);
    StructureFlags f;
    f.connected_components = connected_components(g);
    f.is_complete = is_complete(g);
    f.regularity_degree = regularity_degree(g);
    f.is_regular = f.regularity_degree.has_value();
    f.max_degree = max_degree(g);
    f.v_max = max_degree_vertices(g);
    f.centre_vertices = centre_vertices(g);
    return f;
}

struct SrgParameters {
    std::size_t n = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

// Strongly regular parameters, with the convention 1 <= k < n - 1.
inline std::optional<SrgParameters> srg_parameters(const Graph& g) {
    detail::check_nonempty(g);
    const std::size_t n = g.order();
    const auto k = regularity_degree(g);
    if (!k || *k < 1 || *k + 1 >= n) return std::nullopt;
    std::optional<std::size_t> lambda, mu;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const auto common = static_cast<std::size_t>(std::popcount(g.row(u) & g.row(v)));
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (!slot) slot = common;
            else if (*slot != common) return std::nullopt;
        }
    }
    return SrgParameters{n, *k, *lambda, *mu};
}

struct MbaParameters {
    std::size_t n = 0, k = 0, d = 0;
    friend bool operator==(const MbaParameters&, const MbaParameters&) = default;
};

// (n, k, d) = (|V|, |V_max|, max degree) when g is connected, non-regular and
// the vertices of non-maximal degree induce a complete graph.
inline std::optional<MbaParameters> mba_parameters(const Graph& g) {
    detail::check_nonempty(g);
    if (regularity_degree(g) || !is_connected(g)) return std::nullopt;
    const VertexSet vmax = max_degree_vertices(g);
    if (!is_complete(induced(g, vmax.complement()))) return std::nullopt;
    return MbaParameters{g.order(), vmax.size(), max_degree(g)};
}

// ---------------------------------------------------------------------------
// Builders

inline Graph edgeless_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

inline Graph path_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle graphs need at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

// Join of edgeless graphs of the given part sizes.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    if (parts.empty()) throw InputError("complete multipartite graph needs at least one part");
    Graph g(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) g = simplicial_join(g, Graph(parts[i]));
    return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return Graph(10, e);
}

}  // namespace raaginf

#endif  // RAAGINF_GRAPH_HPP
