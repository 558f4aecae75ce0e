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
 // Partially commutative (trace) monoid over a graph: two letters commute iff
 // they are adjacent. Classes are stored by their largest word; words compare
 // lexicographically with a proper prefix smaller. Lyndon elements of the
 // monoid index a basis of the lower central series factors.

#ifndef RAAGINF_LYNDON_HPP
#define RAAGINF_LYNDON_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace raaginf {

using Word = std::vector<Vertex>;

inline constexpr std::size_t kMaxLyndonLength = 6;
inline constexpr std::size_t kMaxTraceWordLength = 16;
inline constexpr std::size_t kMaxLyndonWordSpace = 20'000'000;

// A monoid element, represented by the largest word of its class.
struct TraceClass {
    Word std;

    std::size_t length() const noexcept { return std.size(); }
    bool trivial() const noexcept { return std.empty(); }

    friend bool operator==(const TraceClass&, const TraceClass&) = default;
    friend auto operator<=>(const TraceClass& a, const TraceClass& b) { return a.std <=> b.std; }
};

inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (Vertex v : w) out += "v" + std::to_string(v);
    return out;
}

// Leaf when letter is set, otherwise [left, right].
struct BracketTree {
    std::optional<Vertex> letter;
    std::shared_ptr<const BracketTree> left, right;

    static BracketTree leaf(Vertex v) { return {v, nullptr, nullptr}; }
    static BracketTree node(BracketTree l, BracketTree r) {
        return {std::nullopt, std::make_shared<const BracketTree>(std::move(l)),
                std::make_shared<const BracketTree>(std::move(r))};
    }

    bool is_leaf() const noexcept { return letter.has_value(); }

    Word leaves() const {
        if (is_leaf()) return {*letter};
        Word w = left->leaves();
        const Word r = right->leaves();
        w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    std::string to_string() const {
        if (is_leaf()) return "v" + std::to_string(*letter);
        return "[" + left->to_string() + "," + right->to_string() + "]";
    }
};

class TraceMonoid {
public:
    explicit TraceMonoid(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const noexcept { return g_; }

    bool commute(Vertex a, Vertex b) const { return a != b && g_.adjacent(a, b); }

    // Generators of the same class: distinct and non-adjacent letters do not commute.
    bool noncommuting(Vertex a, Vertex b) const { return a != b && !g_.adjacent(a, b); }

    // Every word of the class of w, sorted ascending.
    std::vector<Word> words_of(const Word& w) const {
        check_word(w);
        std::set<Word> seen{w};
        std::queue<Word> todo;
        todo.push(w);
        while (!todo.empty()) {
            Word cur = std::move(todo.front());
            todo.pop();
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                if (!commute(cur[i], cur[i + 1])) continue;
                Word next = cur;
                std::swap(next[i], next[i + 1]);
                if (seen.insert(next).second) todo.push(std::move(next));
            }
        }
        return {seen.begin(), seen.end()};
    }

    std::vector<Word> words_of(const TraceClass& m) const { return words_of(m.std); }

    TraceClass class_of(const Word& w) const { return {words_of(w).back()}; }

    TraceClass concat(const TraceClass& x, const TraceClass& y) const {
        Word w = x.std;
        w.insert(w.end(), y.std.begin(), y.std.end());
        return class_of(w);
    }

    VertexSet init(const TraceClass& m) const {
        Mask out = 0;
        for (const Word& w : words_of(m))
            if (!w.empty()) out |= detail::bit(w.front());
        return {g_.order(), out};
    }

    VertexSet supp(const TraceClass& m) const {
        Mask out = 0;
        for (Vertex v : m.std) out |= detail::bit(v);
        return {g_.order(), out};
    }

    VertexSet zeta(const TraceClass& m) const {
        const VertexSet s = supp(m);
        Mask out = s.mask();
        for (Vertex a : s.members())
            for (Vertex b = 0; b < g_.order(); ++b)
                if (noncommuting(a, b)) out |= detail::bit(b);
        return {g_.order(), out};
    }

    // Every factorization m = xy with x, y nontrivial, deduplicated.
    std::vector<std::pair<TraceClass, TraceClass>> factorizations(const TraceClass& m) const {
        std::set<std::pair<TraceClass, TraceClass>> out;
        for (const Word& w : words_of(m))
            for (std::size_t p = 1; p < w.size(); ++p)
                out.emplace(class_of(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p))),
                            class_of(Word(w.begin() + static_cast<std::ptrdiff_t>(p), w.end())));
        return {out.begin(), out.end()};
    }

    // m < y for every factorization m = xy into nontrivial factors.
    bool is_lyndon(const TraceClass& m) const {
        if (m.trivial()) throw InputError("the trivial element is never a Lyndon element");
        check_word(m.std);
        for (const Word& w : words_of(m))
            for (std::size_t p = 1; p < w.size(); ++p)
                if (!(m < class_of(Word(w.begin() + static_cast<std::ptrdiff_t>(p), w.end())))) return false;
        return true;
    }

    // Recursive characterization: a letter, or xy with x < y Lyndon and
    // init(y) in zeta(x).
    bool is_lyndon_recursive(const TraceClass& m) const {
        if (m.trivial()) throw InputError("the trivial element is never a Lyndon element");
        std::map<Word, bool> memo;
        return lyndon_recursive(m, memo);
    }

    std::pair<TraceClass, TraceClass> standard_factorization(const TraceClass& m) const {
        if (m.length() < 2) throw InputError("standard factorization needs length at least 2");
        if (!is_lyndon(m)) throw InputError("standard factorization needs a Lyndon element");
        std::optional<std::pair<TraceClass, TraceClass>> best;
        for (auto& [x, y] : factorizations(m)) {
            if (!(x < y) || !is_lyndon(x) || !is_lyndon(y)) continue;
            if (!zeta(x).contains(y.std.front())) continue;
            if (!best || y < best->second) best.emplace(x, y);
        }
        if (!best) throw InputError("Lyndon element without admissible factorization");
        return *best;
    }

    BracketTree bracketing(const TraceClass& m) const {
        if (m.trivial() || !is_lyndon(m)) throw InputError("bracketing needs a Lyndon element");
        if (m.length() == 1) return BracketTree::leaf(m.std.front());
        auto [x, y] = standard_factorization(m);
        return BracketTree::node(bracketing(x), bracketing(y));
    }

    // All Lyndon classes of the given length, ascending.
    std::vector<TraceClass> enumerate_lyndon(std::size_t length) const {
        if (length < 1 || length > kMaxLyndonLength)
            throw ResourceError("Lyndon enumeration supports lengths 1.." + std::to_string(kMaxLyndonLength));
        const std::size_t n = g_.order();
        std::size_t space = 1;
        for (std::size_t i = 0; i < length; ++i) {
            space *= n;
            if (space > kMaxLyndonWordSpace) throw ResourceError("Lyndon enumeration word space too large");
        }
        std::vector<TraceClass> out;
        Word w(length, 0);
        // Each class is visited once, at its largest word. A commuting ascent
        // can be swapped upward, so such prefixes are skipped early.
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == length) {
                const TraceClass m{w};
                if (class_of(w).std == w && is_lyndon(m)) out.push_back(m);
                return;
            }
            for (Vertex v = 0; v < n; ++v) {
                if (pos > 0 && w[pos - 1] < v && commute(w[pos - 1], v)) continue;
                w[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        return out;
    }

    // The explicit families for lengths 1 to 3, built from adjacency alone.
    std::vector<TraceClass> closed_form_le(std::size_t length) const {
        if (length < 1 || length > 3) throw InputError("closed forms exist for lengths 1..3");
        const std::size_t n = g_.order();
        std::set<TraceClass> out;
        auto nc = [&](Vertex a, Vertex b) { return noncommuting(a, b); };
        if (length == 1) {
            for (Vertex i = 0; i < n; ++i) out.insert(class_of({i}));
        } else if (length == 2) {
            for (Vertex i = 0; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j)
                    if (nc(i, j)) out.insert(class_of({i, j}));
        } else {
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex k = i + 1; k < n; ++k)
                    if (nc(i, k)) {
                        out.insert(class_of({i, i, k}));
                        out.insert(class_of({i, k, k}));
                    }
                for (Vertex j = i + 1; j < n; ++j) {
                    if (!nc(i, j)) continue;
                    for (Vertex k = i + 1; k < n; ++k) {
                        if (k == j) continue;
                        if (k > j && nc(i, k)) out.insert(class_of({i, j, k}));
                        if (nc(i, k) || nc(j, k)) out.insert(class_of({i, j, k}));
                    }
                }
            }
        }
        return {out.begin(), out.end()};
    }

private:
    void check_word(const Word& w) const {
        if (w.size() > kMaxTraceWordLength)
            throw ResourceError("trace words are limited to " + std::to_string(kMaxTraceWordLength) + " letters");
        for (Vertex v : w)
            if (v >= g_.order()) throw InputError("letter " + std::to_string(v) + " out of range");
    }

    bool lyndon_recursive(const TraceClass& m, std::map<Word, bool>& memo) const {
        if (m.length() == 1) return true;
        if (auto it = memo.find(m.std); it != memo.end()) return it->second;
        bool found = false;
        for (auto& [x, y] : factorizations(m)) {
            if (!(x < y)) continue;
            const VertexSet first = init(y);
            if (first.size() != 1 || !zeta(x).contains(first.members().front())) continue;
            if (lyndon_recursive(x, memo) && lyndon_recursive(y, memo)) {
                found = true;
                break;
            }
        }
        memo.emplace(m.std, found);
        return found;
    }

    Graph g_;
};

// rank L_l for l = 1..upto.
inline std::vector<std::size_t> lcs_ranks(const Graph& g, std::size_t upto) {
    const TraceMonoid tm(g);
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= upto; ++l) out.push_back(tm.enumerate_lyndon(l).size());
    return out;
}

}  // namespace raaginf

#endif  // RAAGINF_LYNDON_HPP
