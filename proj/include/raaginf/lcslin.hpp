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
 // Exact integer linear algebra on the first lower central series factors:
 // signed graph automorphisms, the matrices they induce on L1, L2 and on the
 // span of the triples [vi,vj,vi], [vi,vj,vj], and eigenvalue-1 detection via
 // det(I - M) = 0.

#ifndef RAAGINF_LCSLIN_HPP
#define RAAGINF_LCSLIN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autgrp.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "parallel.hpp"

namespace raaginf {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxSignedAutOrder = 7;

// Dense row-major matrix.
template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols, T fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        for (const auto& r : init) {
            if (r.size() != cols_) throw InputError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix dimensions do not match for multiplication");
        BasicMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    // Exactly one nonzero entry, equal to +1 or -1, in every row and column.
    bool is_signed_permutation() const {
        if (!square()) return false;
        std::vector<int> col_hits(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            int row_hits = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& x = (*this)(i, j);
                if (x == T(0)) continue;
                if (x != T(1) && x != T(-1)) return false;
                ++row_hits;
                ++col_hits[j];
            }
            if (row_hits != 1) return false;
        }
        for (int h : col_hits)
            if (h != 1) return false;
        return true;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                if constexpr (std::is_arithmetic_v<T>) out += std::to_string((*this)(i, j));
                else out += (*this)(i, j).str();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = BasicMatrix<std::int64_t>;
using BigMatrix = BasicMatrix<BigInt>;

namespace detail {

inline BigMatrix widen(const IntMatrix& m) {
    BigMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

__extension__ using Int128 = __int128;

// out = (a*b - c*d) / e; false on int64 overflow.
inline bool bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                         std::int64_t& out) {
    Int128 v = static_cast<Int128>(a) * b - static_cast<Int128>(c) * d;
    v /= e;
    if (v > INT64_MAX || v < INT64_MIN) return false;
    out = static_cast<std::int64_t>(v);
    return true;
}

inline bool bareiss_step(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, const BigInt& e,
                         BigInt& out) {
    out = (a * b - c * d) / e;
    return true;
}

// Fraction-free elimination; nullopt when an intermediate leaves T's range.
template <class T>
std::optional<T> bareiss(BasicMatrix<T> m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (!bareiss_step(m(i, j), m(k, k), m(i, k), m(k, j), prev, m(i, j))) return std::nullopt;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if constexpr (std::is_integral_v<T>)
        if (negate && det == std::numeric_limits<T>::min()) return std::nullopt;
    return negate ? T(-det) : det;
}

}  // namespace detail

inline BigInt det_exact(const BigMatrix& m) {
    if (!m.square()) throw InputError("determinant of a non-square matrix");
    return *detail::bareiss(m);
}

// int64 elimination first; promoted to arbitrary precision on overflow.
inline BigInt det_exact(const IntMatrix& m) {
    if (!m.square()) throw InputError("determinant of a non-square matrix");
    if (auto d = detail::bareiss(m)) return BigInt(*d);
    return det_exact(detail::widen(m));
}

inline BigInt det_identity_minus(const IntMatrix& m) {
    if (!m.square()) throw InputError("eigenvalue test on a non-square matrix");
    IntMatrix a(m.rows(), m.cols());
    bool fits = true;
    for (std::size_t i = 0; i < a.rows() && fits; ++i)
        for (std::size_t j = 0; j < a.cols() && fits; ++j)
            fits = !__builtin_sub_overflow(std::int64_t{i == j}, m(i, j), &a(i, j));
    if (fits) return det_exact(a);
    BigMatrix big = detail::widen(m);
    for (std::size_t i = 0; i < big.rows(); ++i)
        for (std::size_t j = 0; j < big.cols(); ++j) big(i, j) = BigInt(i == j ? 1 : 0) - big(i, j);
    return det_exact(big);
}

inline bool has_eigenvalue_one(const IntMatrix& m) { return det_identity_minus(m) == 0; }

// Cyclic shift with signs: column k-1 carries e_k in row 0, column i-1 carries e_i in row i.
inline IntMatrix p_matrix(const std::vector<int>& signs) {
    if (signs.empty()) throw InputError("P-matrix needs at least one sign");
    const std::size_t k = signs.size();
    IntMatrix p(k, k);
    for (int e : signs)
        if (e != 1 && e != -1) throw InputError("P-matrix signs must be +1 or -1");
    p(0, k - 1) = signs[k - 1];
    for (std::size_t i = 1; i < k; ++i) p(i, i - 1) = signs[i - 1];
    return p;
}

// v_i -> v_{perm(i)}^{signs[i]}.
struct SignedAut {
    VertexPermutation perm;
    std::vector<int> signs;

    static SignedAut identity(std::size_t n) { return {VertexPermutation::identity(n), std::vector<int>(n, 1)}; }

    std::size_t size() const noexcept { return perm.size(); }

    // (this after other): apply other first.
    SignedAut after(const SignedAut& other) const {
        std::vector<int> e(size());
        for (Vertex i = 0; i < size(); ++i) e[i] = signs[other.perm(i)] * other.signs[i];
        return {perm.after(other.perm), std::move(e)};
    }

    SignedAut inverse() const {
        const VertexPermutation inv = perm.inverse();
        std::vector<int> e(size());
        for (Vertex i = 0; i < size(); ++i) e[i] = signs[inv(i)];
        return {inv, std::move(e)};
    }

    bool valid_for(const Graph& g) const {
        if (signs.size() != perm.size() || !perm.is_automorphism_of(g)) return false;
        for (int e : signs)
            if (e != 1 && e != -1) return false;
        return true;
    }

    friend bool operator==(const SignedAut&, const SignedAut&) = default;
};

namespace detail {

inline void check_signed_budget(const Graph& g) {
    if (g.order() > kMaxSignedAutOrder)
        throw ResourceError("signed automorphism enumeration is limited to " + std::to_string(kMaxSignedAutOrder) +
                            " vertices");
}

inline std::vector<int> signs_from_mask(std::size_t n, Mask negative) {
    std::vector<int> e(n, 1);
    for (Vertex i = 0; i < n; ++i)
        if (negative & bit(i)) e[i] = -1;
    return e;
}

}  // namespace detail

// Automorphisms in lexicographic order, each with sign masks 0 .. 2^n - 1
// (bit i set means e_i = -1).
template <class F>
void for_each_signed_aut(const Graph& g, F&& f) {
    detail::check_signed_budget(g);
    const std::size_t n = g.order();
    for (const auto& p : automorphisms(g))
        for (Mask neg = 0; neg < (Mask{1} << n); ++neg) f(SignedAut{p, detail::signs_from_mask(n, neg)});
}

inline std::vector<SignedAut> signed_auts(const Graph& g) {
    std::vector<SignedAut> out;
    for_each_signed_aut(g, [&](SignedAut a) { out.push_back(std::move(a)); });
    return out;
}

// Non-adjacent pairs (i, j), i < j, in lexicographic order.
struct L2Basis {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::map<std::pair<Vertex, Vertex>, std::size_t> index;

    explicit L2Basis(const Graph& g) {
        for (Vertex i = 0; i < g.order(); ++i)
            for (Vertex j = i + 1; j < g.order(); ++j)
                if (!g.adjacent(i, j)) {
                    index.emplace(std::make_pair(i, j), pairs.size());
                    pairs.emplace_back(i, j);
                }
    }

    std::size_t size() const noexcept { return pairs.size(); }
};

// For each L2 pair (i, j): (i, j, i) at 2c and (i, j, j) at 2c + 1.
struct L3SubBasis {
    L2Basis l2;
    std::vector<std::array<Vertex, 3>> triples;

    explicit L3SubBasis(const Graph& g) : l2(g) {
        for (auto [i, j] : l2.pairs) {
            triples.push_back({i, j, i});
            triples.push_back({i, j, j});
        }
    }

    std::size_t size() const noexcept { return triples.size(); }
};

inline IntMatrix induced_matrix(const Graph& g, const SignedAut& a, int level) {
    if (a.size() != g.order()) throw InputError("signed automorphism size does not match graph order");
    const std::size_t n = g.order();
    if (level == 1) {
        IntMatrix m(n, n);
        for (Vertex i = 0; i < n; ++i) m(a.perm(i), i) = a.signs[i];
        return m;
    }
    if (level == 2) {
        const L2Basis b(g);
        IntMatrix m(b.size(), b.size());
        for (std::size_t c = 0; c < b.size(); ++c) {
            const auto [i, j] = b.pairs[c];
            const Vertex p = a.perm(i), q = a.perm(j);
            const int eps = p > q ? -1 : 1;
            m(b.index.at(std::minmax(p, q)), c) = a.signs[i] * a.signs[j] * eps;
        }
        return m;
    }
    if (level == 3) {
        const L3SubBasis b(g);
        IntMatrix m(b.size(), b.size());
        for (std::size_t c = 0; c < b.l2.size(); ++c) {
            const auto [i, j] = b.l2.pairs[c];
            const Vertex p = a.perm(i), q = a.perm(j);
            const std::size_t r = 2 * b.l2.index.at(std::minmax(p, q));
            if (p < q) {
                m(r, 2 * c) = a.signs[j];
                m(r + 1, 2 * c + 1) = a.signs[i];
            } else {
                // [p,q,p] = -[q,p,p] and [p,q,q] = -[q,p,q].
                m(r + 1, 2 * c) = -a.signs[j];
                m(r, 2 * c + 1) = -a.signs[i];
            }
        }
        return m;
    }
    throw InputError("induced matrices exist for levels 1, 2 and 3");
}

// Least level in 1..3 with eigenvalue 1, or 0 when there is none.
inline int eigenvalue_one_level(const Graph& g, const SignedAut& a) {
    for (int level = 1; level <= 3; ++level)
        if (has_eigenvalue_one(induced_matrix(g, a, level))) return level;
    return 0;
}

struct AutnottransReport {
    std::size_t total = 0;
    std::array<std::size_t, 4> by_level{};  // index 0 counts automorphisms without a witness
    std::vector<int> witness_levels;        // one entry per signed automorphism, enumeration order
    std::vector<SignedAut> failures;

    bool holds() const noexcept { return failures.empty(); }
};

inline AutnottransReport check_autnottrans_theorem(const Graph& g, std::size_t jobs = 1) {
    detail::check_nonempty(g);
    if (is_complete(g)) throw InputError("the signed automorphism check needs a non-complete graph");
    const std::vector<SignedAut> all = signed_auts(g);
    AutnottransReport rep;
    rep.total = all.size();
    rep.witness_levels = parallel_map(all, [&](const SignedAut& a) { return eigenvalue_one_level(g, a); }, jobs);
    for (std::size_t i = 0; i < all.size(); ++i) {
        ++rep.by_level[static_cast<std::size_t>(rep.witness_levels[i])];
        if (rep.witness_levels[i] == 0) rep.failures.push_back(all[i]);
    }
    return rep;
}

}  // namespace raaginf

#endif  // RAAGINF_LCSLIN_HPP
