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
 // Characteristic vertex sets: domination closures, their automorphism
 // saturations, transvection-free vertices and the two link-derived sets of
 // max-by-abelian graphs.

#ifndef RAAGINF_CHARCLOSE_HPP
#define RAAGINF_CHARCLOSE_HPP

#include <vector>

#include "autgrp.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace raaginf {

// Least set containing v and closed under u in set, u <= w  =>  w in set.
inline VertexSet v_omega(const Graph& g, Vertex v) {
    detail::check_vertex(g, v);
    const std::size_t n = g.order();
    Mask closed = detail::bit(v);
    std::vector<Vertex> work{v};
    while (!work.empty()) {
        const Vertex u = work.back();
        work.pop_back();
        for (Vertex w = 0; w < n; ++w) {
            if (closed & detail::bit(w)) continue;
            if (detail::dominated_by(g, u, w)) {
                closed |= detail::bit(w);
                work.push_back(w);
            }
        }
    }
    return {n, closed};
}

// Union of the images of v_omega(g, v) under auts, which must be Aut(g).
inline VertexSet v_char(const Graph& g, Vertex v, const std::vector<VertexPermutation>& auts) {
    const VertexSet base = v_omega(g, v);
    VertexSet out = VertexSet::none(g.order());
    for (const auto& p : auts) out = out | p.apply(base);
    return out;
}

inline VertexSet v_char(const Graph& g, Vertex v) { return v_char(g, v, automorphisms(g)); }

// Vertices dominated by no other vertex.
inline VertexSet transvection_free_vertices(const Graph& g) {
    detail::check_nonempty(g);
    Mask m = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        bool free = true;
        for (Vertex w = 0; w < g.order() && free; ++w) free = w == v || !detail::dominated_by(g, v, w);
        if (free) m |= detail::bit(v);
    }
    return {g.order(), m};
}

inline VertexSet transvection_admitting_vertices(const Graph& g) {
    return transvection_free_vertices(g).complement();
}

inline bool is_transvection_free_graph(const Graph& g) {
    return g.order() != 1 && transvection_free_vertices(g) == g.vertices();
}

inline bool is_characteristic_vertex_set(const Graph& g, const VertexSet& s,
                                         const std::vector<VertexPermutation>& auts) {
    if (s.universe() != g.order()) throw InputError("vertex set belongs to a graph of a different order");
    VertexSet closure = VertexSet::none(g.order());
    for (Vertex v : s.members()) closure = closure | v_char(g, v, auts);
    return closure == s;
}

inline bool is_characteristic_vertex_set(const Graph& g, const VertexSet& s) {
    return is_characteristic_vertex_set(g, s, automorphisms(g));
}

struct MbaCharSets {
    VertexSet intersection_links;    // meet of lk(v) over v outside V_max
    VertexSet vmax_cap_union_links;  // V_max meet the join of those links
};

inline MbaCharSets mba_char_sets(const Graph& g) {
    detail::check_nonempty(g);
    if (regularity_degree(g)) throw InputError("characteristic link sets need a non-regular graph");
    const VertexSet vmax = max_degree_vertices(g);
    Mask meet = detail::full_mask(g.order()), join = 0;
    for (Vertex v : vmax.complement().members()) {
        meet &= g.row(v);
        join |= g.row(v);
    }
    return {VertexSet(g.order(), meet), vmax & VertexSet(g.order(), join)};
}

}  // namespace raaginf

#endif  // RAAGINF_CHARCLOSE_HPP
