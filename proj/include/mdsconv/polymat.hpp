/*
   Copyright 2026 mdsconv contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MDSCONV_POLYMAT_HPP
#define MDSCONV_POLYMAT_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace mdsconv {

/// Matrix of polynomials in D over a finite field.
struct PolyMat {
    const Field* f = nullptr;
    size_t rows = 0, cols = 0;
    std::vector<Poly> e;

    PolyMat() = default;
    PolyMat(const Field& field, size_t r, size_t c) : f(&field), rows(r), cols(c), e(r * c) {}

    Poly& at(size_t r, size_t c) { return e[r * cols + c]; }
    const Poly& at(size_t r, size_t c) const { return e[r * cols + c]; }

    /// gamma_i = max entry degree in row i (0 for an all-zero row).
    size_t row_degree(size_t r) const {
        int d = 0;
        for (size_t c = 0; c < cols; ++c) d = std::max(d, polyops::deg(at(r, c)));
        return (size_t)std::max(d, 0);
    }

    bool row_is_zero(size_t r) const {
        for (size_t c = 0; c < cols; ++c)
            if (!at(r, c).empty()) return false;
        return true;
    }

    /// degree gamma = sum of row degrees.
    size_t degree() const {
        size_t g = 0;
        for (size_t r = 0; r < rows; ++r) g += row_degree(r);
        return g;
    }

    /// memory m = max row degree.
    size_t memory() const {
        size_t m = 0;
        for (size_t r = 0; r < rows; ++r) m = std::max(m, row_degree(r));
        return m;
    }

    /// D-coefficient matrix at degree d.
    Mat coefficient(size_t d) const {
        Mat m(*f, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) m.at(r, c) = polyops::coeff(at(r, c), d);
        return m;
    }

    /// Row i = coefficients of D^{gamma_i} across row i.
    Mat leading_matrix() const {
        Mat m(*f, rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            size_t g = row_degree(r);
            for (size_t c = 0; c < cols; ++c) m.at(r, c) = polyops::coeff(at(r, c), g);
        }
        return m;
    }

    bool operator==(const PolyMat& o) const {
        return f == o.f && rows == o.rows && cols == o.cols && e == o.e;
    }
};

/// D^m * M(1/D) with m = global memory of M (coefficient reversal).
inline PolyMat reverse_at_memory(const PolyMat& m) {
    size_t mem = m.memory();
    PolyMat r(*m.f, m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) {
            Poly p(mem + 1, 0);
            for (size_t d = 0; d <= mem; ++d) p[d] = polyops::coeff(m.at(i, j), mem - d);
            polyops::trim(p);
            r.at(i, j) = std::move(p);
        }
    return r;
}

/// Coefficient-wise conjugation x -> x^sqrt(q) over a quadratic field.
inline PolyMat conj(const PolyMat& m) {
    PolyMat r = m;
    for (auto& p : r.e)
        for (auto& c : p) c = m.f->conj(c);
    return r;
}

/// A(D) * B(D)^T.
inline PolyMat mul_abt(const PolyMat& a, const PolyMat& b) {
    if (a.f != b.f || a.cols != b.cols) throw FieldMismatch("incompatible product");
    const Field& f = *a.f;
    PolyMat r(f, a.rows, b.rows);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < b.rows; ++j) {
            Poly acc;
            for (size_t c = 0; c < a.cols; ++c)
                acc = polyops::add(f, acc, polyops::mul(f, a.at(i, c), b.at(j, c)));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

inline bool all_zero(const PolyMat& m) {
    for (const auto& p : m.e)
        if (!p.empty()) return false;
    return true;
}

/// G(D) * (D^{m_H} H(1/D))^T == 0: the sequence-space orthogonality identity
/// after clearing negative powers by the smallest sufficient power of D.
inline bool is_orthogonal_pair(const PolyMat& g, const PolyMat& h) {
    return all_zero(mul_abt(g, reverse_at_memory(h)));
}

/// Rank over the rational function field (fraction-free elimination).
inline size_t poly_rank(PolyMat m) {
    const Field& f = *m.f;
    size_t r = 0;
    Poly prev = polyops::constant(1);
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, c).empty()) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (size_t i = r + 1; i < m.rows; ++i) {
            for (size_t j = c + 1; j < m.cols; ++j) {
                Poly num = polyops::sub(f, polyops::mul(f, m.at(r, c), m.at(i, j)),
                                        polyops::mul(f, m.at(i, c), m.at(r, j)));
                m.at(i, j) = polyops::div_exact(f, num, prev);
            }
            m.at(i, c).clear();
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

/// Determinant of a square polynomial matrix (Bareiss).
inline Poly poly_det(PolyMat m) {
    if (m.rows != m.cols) throw InternalError("determinant of non-square matrix");
    const Field& f = *m.f;
    size_t n = m.rows;
    if (n == 0) return polyops::constant(1);
    bool negate = false;
    Poly prev = polyops::constant(1);
    for (size_t r = 0; r < n; ++r) {
        size_t piv = r;
        while (piv < n && m.at(piv, r).empty()) ++piv;
        if (piv == n) return {};
        if (piv != r) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(r, j));
            negate = !negate;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = r + 1; j < n; ++j) {
                Poly num = polyops::sub(f, polyops::mul(f, m.at(r, r), m.at(i, j)),
                                        polyops::mul(f, m.at(i, r), m.at(r, j)));
                m.at(i, j) = polyops::div_exact(f, num, prev);
            }
            m.at(i, r).clear();
        }
        prev = m.at(r, r);
    }
    Poly det = m.at(n - 1, n - 1);
    if (negate) det = polyops::neg(f, det);
    return det;
}

/// true iff the leading-coefficient matrix has full row rank over GF(q).
inline bool is_row_reduced(const PolyMat& g) {
    return rank(g.leading_matrix()) == g.rows;
}

namespace detail {

inline uint64_t binom(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace detail

/// gcd over all k x k minors is a nonzero constant, i.e. G(D) has a
/// polynomial right inverse (basic, hence non-catastrophic, encoder).
/// Early-exits as soon as the running gcd reaches a unit.
inline bool minor_gcd_is_unit(const PolyMat& g, uint64_t minor_budget = 10000000) {
    size_t k = g.rows, n = g.cols;
    if (poly_rank(g) != k) throw RankDeficient("generator matrix not full row rank");
    Poly acc;  // zero = "no minor folded in yet"
    std::vector<size_t> sel(k);
    for (size_t i = 0; i < k; ++i) sel[i] = i;
    uint64_t seen = 0;
    bool budget_checked = false;
    const Field& f = *g.f;
    while (true) {
        PolyMat sub(f, k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub.at(i, j) = g.at(i, sel[j]);
        acc = polyops::gcd(f, acc, poly_det(sub));
        if (polyops::deg(acc) == 0) return true;
        if (++seen >= 64 && !budget_checked) {
            if (detail::binom(n, k, minor_budget) > minor_budget)
                throw BudgetExceeded("minor enumeration over budget");
            budget_checked = true;
        }
        // next k-combination of columns
        bool advanced = false;
        size_t i = k;
        while (i-- > 0) {
            if (sel[i] != i + n - k) {
                ++sel[i];
                for (size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;  // all minors folded in
    }
    return polyops::deg(acc) == 0;
}

namespace detail {

/// Incremental rank tracker over a finite field.
class IncrementalRref {
  public:
    explicit IncrementalRref(const Field& f, size_t width) : f_(&f), width_(width) {}

    /// Inserts v into the running basis; returns true iff rank grew.
    bool insert(std::vector<uint32_t> v) {
        for (size_t r = 0; r < rows_.size(); ++r) {
            uint32_t c = v[pivots_[r]];
            if (!c) continue;
            for (size_t j = 0; j < width_; ++j)
                v[j] = f_->sub(v[j], f_->mul(c, rows_[r][j]));
        }
        size_t p = 0;
        while (p < width_ && v[p] == 0) ++p;
        if (p == width_) return false;
        uint32_t s = f_->inv(v[p]);
        for (size_t j = 0; j < width_; ++j) v[j] = f_->mul(v[j], s);
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    size_t rank() const { return rows_.size(); }

  private:
    const Field* f_;
    size_t width_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace detail

/// Reduce a full-row-rank polynomial matrix to row-reduced (minimal) form by
/// iterated leading-coefficient cancellation. Preserves the row module.
inline void row_reduce_in_place(PolyMat& g) {
    const Field& f = *g.f;
    while (true) {
        Mat lead = g.leading_matrix();
        Mat leadT(f, lead.cols, lead.rows);  // left kernel = right kernel of the transpose
        for (size_t i = 0; i < lead.rows; ++i)
            for (size_t j = 0; j < lead.cols; ++j) leadT.at(j, i) = lead.at(i, j);
        Mat ker = nullspace(leadT);
        if (ker.rows == 0) return;
        std::vector<uint32_t> c = ker.row(0);
        size_t gmax = 0, target = g.rows;
        for (size_t i = 0; i < g.rows; ++i)
            if (c[i]) gmax = std::max(gmax, g.row_degree(i));
        for (size_t i = 0; i < g.rows; ++i)
            if (c[i] && g.row_degree(i) == gmax) { target = i; break; }
        if (target == g.rows) throw InternalError("leading kernel without rows");
        std::vector<Poly> nrow(g.cols);
        for (size_t i = 0; i < g.rows; ++i) {
            if (!c[i]) continue;
            size_t sh = gmax - g.row_degree(i);
            for (size_t j = 0; j < g.cols; ++j) {
                Poly term = polyops::scale(f, polyops::shift(g.at(i, j), sh), c[i]);
                nrow[j] = polyops::add(f, nrow[j], term);
            }
        }
        bool zero = true;
        for (auto& p : nrow) zero = zero && p.empty();
        if (zero) throw RankDeficient("row reduction annihilated a row");
        for (size_t j = 0; j < g.cols; ++j) g.at(target, j) = nrow[j];
    }
}

/// Minimal (reduced, basic) basis H of the sequence-space dual of the row
/// module of G under the pairing sum_t u_t . v_t:
/// G(D) * (D^{m_H} H(1/D))^T = 0 and rows(H) = n - k.
inline PolyMat poly_kernel_basis(const PolyMat& g) {
    const Field& f = *g.f;
    size_t n = g.cols, k = g.rows;
    if (poly_rank(g) != k) throw RankDeficient("kernel of rank-deficient matrix");
    size_t target = n - k;
    PolyMat h(f, 0, n);
    std::vector<size_t> hdeg;
    if (target == 0) return h;
    PolyMat grev = reverse_at_memory(g);
    size_t mem = g.memory();
    size_t cap = g.degree() + mem + 4;
    for (size_t d = 0; d <= cap; ++d) {
        // coefficient system for u of degree <= d with u * grev^T = 0
        size_t unknowns = n * (d + 1);
        size_t eqs = k * (d + mem + 1);
        Mat A(f, eqs, unknowns);
        for (size_t i = 0; i < k; ++i)
            for (size_t s = 0; s <= d + mem; ++s)
                for (size_t j = 0; j < n; ++j)
                    for (size_t e2 = 0; e2 <= d; ++e2) {
                        if (s < e2 || s - e2 > mem) continue;
                        // unknown layout: index = e2 * n + j
                        A.at(i * (d + mem + 1) + s, e2 * n + j) =
                            polyops::coeff(grev.at(i, j), s - e2);
                    }
        Mat sols = nullspace(A);
        detail::IncrementalRref inc(f, unknowns);
        // shifts of already-chosen rows span the known part of the solution set
        for (size_t r = 0; r < h.rows; ++r)
            for (size_t sh = 0; sh + hdeg[r] <= d; ++sh) {
                std::vector<uint32_t> v(unknowns, 0);
                for (size_t j = 0; j < n; ++j)
                    for (size_t e2 = 0; e2 <= hdeg[r]; ++e2)
                        v[(e2 + sh) * n + j] = polyops::coeff(h.at(r, j), e2);
                inc.insert(std::move(v));
            }
        for (size_t s = 0; s < sols.rows && h.rows < target; ++s) {
            std::vector<uint32_t> v = sols.row(s);
            if (!inc.insert(v)) continue;
            std::vector<Poly> row(n);
            for (size_t j = 0; j < n; ++j) {
                Poly p(d + 1, 0);
                for (size_t e2 = 0; e2 <= d; ++e2) p[e2] = v[e2 * n + j];
                polyops::trim(p);
                row[j] = std::move(p);
            }
            h.e.insert(h.e.end(), row.begin(), row.end());
            ++h.rows;
            hdeg.push_back(h.row_degree(h.rows - 1));
        }
        if (h.rows == target) break;
    }
    if (h.rows != target) throw InternalError("dual basis incomplete at degree cap");
    row_reduce_in_place(h);
    if (!is_orthogonal_pair(g, h)) throw InternalError("dual basis fails orthogonality");
    return h;
}

}  // namespace mdsconv

#endif
