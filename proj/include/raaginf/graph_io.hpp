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
 // Text formats: graph6 (the nauty/networkx de-facto standard), plain edge
 // lists "n; u-v, u-v", and named builtin families.

#ifndef RAAGINF_GRAPH_IO_HPP
#define RAAGINF_GRAPH_IO_HPP

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace raaginf {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Upper triangle in column order (0,1),(0,2),(1,2),(0,3),..., six bits per
// byte, most significant first, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// Strict decoder: exact length, zero padding, optional ">>graph6<<" header.
// The empty graph is rejected since it is never a valid input.
inline Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
        ++base;
    }
    text = detail::trim(text);
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        base += header.size();
    }
    if (text.empty()) throw ParseError("empty graph6 string", base);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", base + i);
    }
    std::size_t n = 0, pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 size prefix", base);
        n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
            static_cast<std::size_t>(text[3] - 63);
        pos = 4;
    }
    if (n == 0) throw ParseError("graph6 encodes the empty graph", base);
    if (n > kMaxVertices) throw ParseError("graph6 graph has more than 64 vertices", base);
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != pos + bytes)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(pos + bytes) + " bytes",
                         base + std::min(text.size(), pos + bytes));
    std::vector<Mask> rows(n, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = text[pos + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i] |= detail::bit(j);
                rows[j] |= detail::bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = text[pos + bytes - 1] - 63;
        if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
            throw ParseError("non-zero graph6 padding bits", base + pos + bytes - 1);
    }
    return Graph::from_rows(std::move(rows));
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

namespace detail {

class EdgeListParser {
public:
    explicit EdgeListParser(std::string_view s) : s_(s) {}

    Graph parse() {
        skip_space();
        const std::size_t n = number();
        if (n == 0) throw ParseError("edge list declares the empty graph", 0);
        if (n > kMaxVertices) throw ParseError("edge list declares more than 64 vertices", 0);
        skip_space();
        expect(';');
        std::vector<std::pair<Vertex, Vertex>> edges;
        skip_space();
        while (pos_ < s_.size()) {
            const std::size_t at = pos_;
            const std::size_t u = number();
            skip_space();
            expect('-');
            skip_space();
            const std::size_t v = number();
            if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
            if (u == v) throw ParseError("self-loop", at);
            edges.emplace_back(u, v);
            skip_space();
            if (pos_ < s_.size()) {
                expect(',');
                skip_space();
                if (pos_ == s_.size()) throw ParseError("trailing comma", pos_);
            }
        }
        return Graph(n, edges);
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    std::size_t number() {
        std::size_t value = 0;
        const char* first = s_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), value);
        if (ec != std::errc{} || ptr == first) throw ParseError("expected a number", pos_);
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Graph from_edge_list(std::string_view text) { return detail::EdgeListParser(text).parse(); }

// One input line: an edge list if it contains ';', otherwise graph6.
inline Graph parse_graph_line(std::string_view line) {
    return line.find(';') != std::string_view::npos ? from_edge_list(line) : from_graph6(line);
}

// cycle(n), complete(n), edgeless(n), path(n), complete_multipartite(a,b,...), petersen
inline Graph builtin_graph(std::string_view spec) {
    spec = detail::trim(spec);
    const std::size_t open = spec.find('(');
    const std::string_view name = detail::trim(spec.substr(0, open));
    std::vector<std::size_t> args;
    if (open != std::string_view::npos) {
        if (spec.back() != ')') throw ParseError("builtin spec missing ')'", spec.size());
        std::string_view inner = spec.substr(open + 1, spec.size() - open - 2);
        std::size_t offset = open + 1;
        while (!detail::trim(inner).empty()) {
            const std::size_t comma = inner.find(',');
            const std::string_view tok = detail::trim(inner.substr(0, comma));
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError("bad builtin argument", offset);
            args.push_back(v);
            if (comma == std::string_view::npos) break;
            inner.remove_prefix(comma + 1);
            offset += comma + 1;
        }
    }
    auto one_arg = [&]() {
        if (args.size() != 1 || args[0] == 0) throw InputError(std::string(name) + " takes one positive argument");
        return args[0];
    };
    if (name == "cycle") return cycle_graph(one_arg());
    if (name == "complete") return complete_graph(one_arg());
    if (name == "edgeless") return edgeless_graph(one_arg());
    if (name == "path") return path_graph(one_arg());
    if (name == "complete_multipartite") {
        for (auto a : args)
            if (a == 0) throw InputError("complete_multipartite parts must be positive");
        return complete_multipartite(args);
    }
    if (name == "petersen") {
        if (!args.empty()) throw InputError("petersen takes no arguments");
        return petersen_graph();
    }
    throw InputError("unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace raaginf

#endif  // RAAGINF_GRAPH_IO_HPP
