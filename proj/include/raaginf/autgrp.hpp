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
 // Graph automorphisms, canonical forms and isomorphism-class enumeration for
 // small graphs. Everything here is plain backtracking over an iterated
 // degree refinement; no external canonical-labeling dependency.

#ifndef RAAGINF_AUTGRP_HPP
#define RAAGINF_AUTGRP_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "graph_io.hpp"

namespace raaginf {

inline constexpr std::size_t kMaxSymmetryOrder = 10;
inline constexpr std::size_t kMaxEnumerationOrder = 8;

// A bijection of {0, ..., n-1}; image()[v] is where v goes.
class VertexPermutation {
public:
    VertexPermutation() = default;

    explicit VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (Vertex v : image_) {
            if (v >= image_.size() || seen[v]) throw InputError("not a permutation");
            seen[v] = true;
        }
    }

    static VertexPermutation identity(std::size_t n) {
        std::vector<Vertex> img(n);
        std::iota(img.begin(), img.end(), Vertex{0});
        return VertexPermutation(std::move(img));
    }

    std::size_t size() const noexcept { return image_.size(); }
    const std::vector<Vertex>& image() const noexcept { return image_; }
    Vertex operator()(Vertex v) const { return image_.at(v); }

    // (this after other)(v) = this(other(v))
    VertexPermutation after(const VertexPermutation& other) const {
        if (other.size() != size()) throw InputError("composing permutations of different sizes");
        std::vector<Vertex> img(size());
        for (Vertex v = 0; v < size(); ++v) img[v] = image_[other.image_[v]];
        return VertexPermutation(std::move(img));
    }

    VertexPermutation inverse() const {
        std::vector<Vertex> img(size());
        for (Vertex v = 0; v < size(); ++v) img[image_[v]] = v;
        return VertexPermutation(std::move(img));
    }

    VertexSet apply(const VertexSet& s) const {
        Mask m = 0;
        for (Vertex v : s.members()) m |= detail::bit(image_.at(v));
        return {s.universe(), m};
    }

    bool is_automorphism_of(const Graph& g) const {
        if (g.order() != size()) return false;
        for (Vertex u = 0; u < size(); ++u)
            for (Vertex v = u + 1; v < size(); ++v)
                if (g.adjacent(u, v) != g.adjacent(image_[u], image_[v])) return false;
        return true;
    }

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
    friend auto operator<=>(const VertexPermutation& a, const VertexPermutation& b) { return a.image_ <=> b.image_; }

private:
    std::vector<Vertex> image_;
};

// Graph with vertex image(v) carrying what v carried in g.
inline Graph relabel(const Graph& g, const VertexPermutation& p) {
    if (p.size() != g.order()) throw InputError("permutation size does not match graph order");
    std::vector<Mask> rows(g.order(), 0);
    std::vector<std::string> labels(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        labels[p(u)] = g.labels()[u];
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v)) rows[p(u)] |= detail::bit(p(v));
    }
    return Graph::from_rows(std::move(rows), std::move(labels));
}

namespace detail {

inline void check_symmetry_budget(const Graph& g) {
    if (g.order() > kMaxSymmetryOrder)
        throw ResourceError("symmetry search is limited to " + std::to_string(kMaxSymmetryOrder) +
                            " vertices, got " + std::to_string(g.order()));
}

// Iterated degree refinement. Colors are ranks of (color, sorted neighbour
// colors) signatures, so the ordering of color classes is isomorphism-invariant.
inline std::vector<std::size_t> refine_colors(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = degree(g, v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (Vertex w : VertexSet(n, g.row(v)).members()) sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            color[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return color;
}

// u and v have the same neighbours apart from each other, so swapping them is
// an automorphism fixing everything else.
inline bool twins(const Graph& g, Vertex u, Vertex v) noexcept {
    return (g.rows()[u] & ~bit(v)) == (g.rows()[v] & ~bit(u));
}

// Lexicographic comparison of two columns read from position 0 upward.
inline int compare_columns(Mask a, Mask b) noexcept {
    const Mask x = a ^ b;
    if (x == 0) return 0;
    return (a >> std::countr_zero(x)) & 1 ? 1 : -1;
}

// Finds the position -> vertex assignment whose upper-triangle bit string (in
// graph6 column order) is lexicographically smallest among all assignments
// respecting the refined color order.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), color_(refine_colors(g)) {
        cell_.assign(color_.begin(), color_.end());
        std::sort(cell_.begin(), cell_.end());
        current_.resize(n_);
        cur_cols_.resize(n_);
        best_cols_.resize(n_);
        placed_.assign(n_, false);
    }

    std::vector<Vertex> run() {
        search(0, false);
        return best_;
    }

private:
    bool search(std::size_t k, bool better) {
        if (k == n_) {
            if (better || !have_best_) {
                best_ = current_;
                best_cols_ = cur_cols_;
                have_best_ = true;
                return true;
            }
            return false;
        }
        bool updated = false;
        std::vector<Vertex> tried;
        for (Vertex v = 0; v < n_; ++v) {
            if (placed_[v] || color_[v] != cell_[k]) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g_, t, v); })) continue;
            tried.push_back(v);
            Mask col = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (g_.adjacent(current_[i], v)) col |= bit(i);
            bool b = better;
            if (!b && have_best_) {
                const int c = compare_columns(col, best_cols_[k]);
                if (c > 0) continue;
                b = c < 0;
            }
            placed_[v] = true;
            current_[k] = v;
            cur_cols_[k] = col;
            if (search(k + 1, b)) {
                // The new best shares this frame's prefix.
                better = false;
                updated = true;
            }
            placed_[v] = false;
        }
        return updated;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> cell_;
    std::vector<Vertex> current_, best_;
    std::vector<Mask> cur_cols_, best_cols_;
    std::vector<bool> placed_;
    bool have_best_ = false;
};

}  // namespace detail

// Permutation sending each vertex to its canonical position.
inline VertexPermutation canonical_labeling(const Graph& g) {
    detail::check_symmetry_budget(g);
    const std::vector<Vertex> order = detail::CanonicalSearch(g).run();
    std::vector<Vertex> img(g.order());
    for (std::size_t pos = 0; pos < order.size(); ++pos) img[order[pos]] = pos;
    return VertexPermutation(std::move(img));
}

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

// graph6 of the canonical relabeling; equal iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

// All automorphisms in lexicographic order of their image arrays.
inline std::vector<VertexPermutation> automorphisms(const Graph& g) {
    detail::check_symmetry_budget(g);
    if (g.empty()) throw InputError("the empty graph is not a valid input");
    const std::size_t n = g.order();
    const auto color = detail::refine_colors(g);
    std::vector<VertexPermutation> out;
    std::vector<Vertex> img(n);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            out.emplace_back(img);
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(img[u], w);
            if (!ok) continue;
            used[w] = true;
            img[v] = w;
            self(self, v + 1);
            used[w] = false;
        }
    };
    extend(extend, 0);
    return out;
}

// One canonical representative per isomorphism class on n vertices, sorted by
// edge count and then canonical graph6. Built by extending each class on
// n - 1 vertices with a new vertex in every possible way.
inline std::vector<std::vector<Graph>> enumerate_graphs_upto(std::size_t max_n) {
    if (max_n < 1) throw InputError("enumeration needs at least one vertex");
    if (max_n > kMaxEnumerationOrder)
        throw ResourceError("enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(1)});
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::set<std::string> forms;
        for (const Graph& base : levels.back()) {
            for (Mask nb = 0; nb < (Mask{1} << (n - 1)); ++nb) {
                std::vector<Mask> rows = base.rows();
                rows.push_back(nb);
                for (Vertex v = 0; v + 1 < n; ++v)
                    if (nb & detail::bit(v)) rows[v] |= detail::bit(n - 1);
                forms.insert(canonical_form(Graph::from_rows(std::move(rows))));
            }
        }
        std::vector<Graph> level;
        level.reserve(forms.size());
        for (const auto& f : forms) level.push_back(from_graph6(f));
        std::stable_sort(level.begin(), level.end(),
                         [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
        levels.push_back(std::move(level));
    }
    return levels;
}

inline std::vector<Graph> enumerate_graphs(std::size_t n) { return enumerate_graphs_upto(n).back(); }

}  // namespace raaginf

#endif  // RAAGINF_AUTGRP_HPP
