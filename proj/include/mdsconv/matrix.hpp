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

#ifndef MDSCONV_MATRIX_HPP
#define MDSCONV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "field.hpp"

namespace mdsconv {

/// Dense matrix over a finite field, row-major integer-encoded entries.
struct Mat {
    const Field* f = nullptr;
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(const Field& field, size_t r, size_t c) : f(&field), rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }

    std::vector<uint32_t> row(size_t r) const {
        return {a.begin() + r * cols, a.begin() + (r + 1) * cols};
    }

    void append_row(const std::vector<uint32_t>& r) {
        a.insert(a.end(), r.begin(), r.end());
        ++rows;
    }

    bool operator==(const Mat& o) const {
        return f == o.f && rows == o.rows && cols == o.cols && a == o.a;
    }
};

struct RrefResult {
    Mat reduced;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

/// Reduced row echelon form; deterministic (first nonzero pivot, top-down).
inline RrefResult rref(const Mat& m) {
    RrefResult res{m, 0, {}};
    Mat& r = res.reduced;
    const Field& f = *m.f;
    size_t pr = 0;
    for (size_t c = 0; c < m.cols && pr < m.rows; ++c) {
        size_t piv = pr;
        while (piv < m.rows && r.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != pr)
            for (size_t j = 0; j < m.cols; ++j) std::swap(r.at(piv, j), r.at(pr, j));
        uint32_t s = f.inv(r.at(pr, c));
        for (size_t j = c; j < m.cols; ++j) r.at(pr, j) = f.mul(r.at(pr, j), s);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == pr) continue;
            uint32_t v = r.at(i, c);
            if (!v) continue;
            for (size_t j = c; j < m.cols; ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(v, r.at(pr, j)));
        }
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = pr;
    return res;
}

inline size_t rank(const Mat& m) { return rref(m).rank; }

/// Basis of {v : M v^T = 0}, one solution per row, from the rref free columns.
inline Mat nullspace(const Mat& m) {
    RrefResult rr = rref(m);
    const Field& f = *m.f;
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    Mat basis(f, 0, m.cols);
    for (size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<uint32_t> v(m.cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < rr.rank; ++i)
            v[rr.pivot_cols[i]] = f.neg(rr.reduced.at(i, c));
        basis.append_row(v);
    }
    return basis;
}

/// v * M^T (v length cols, result length rows).
inline std::vector<uint32_t> mul_vec_mt(const Mat& m, const std::vector<uint32_t>& v) {
    const Field& f = *m.f;
    std::vector<uint32_t> out(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < m.cols; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

struct ExpandResult {
    Mat mat;            // over the base field
    size_t rank = 0;
    size_t dropped = 0; // dependent rows removed (top-down scan)
};

/// Basis expansion of a matrix over GF(q^l) down to GF(q): each row becomes
/// l adjacent rows of beta-coordinates. Optionally removes linearly dependent
/// rows scanning top-down.
inline ExpandResult expand_over_basis(const Mat& m, const Embedding& emb, bool drop_dependent) {
    if (m.f != emb.ext) throw FieldMismatch("matrix not over the embedding extension");
    const Field& base = *emb.base;
    Mat out(base, 0, m.cols);
    for (size_t r = 0; r < m.rows; ++r) {
        for (uint32_t c = 0; c < emb.l; ++c) {
            std::vector<uint32_t> row(m.cols);
            for (size_t j = 0; j < m.cols; ++j) row[j] = emb.coords(m.at(r, j))[c];
            out.append_row(row);
        }
    }
    ExpandResult res;
    if (!drop_dependent) {
        res.rank = rank(out);
        res.mat = std::move(out);
        return res;
    }
    // keep rows that increase the running rank
    Mat kept(base, 0, m.cols);
    size_t rk = 0;
    for (size_t r = 0; r < out.rows; ++r) {
        Mat probe = kept;
        probe.append_row(out.row(r));
        size_t nrk = rank(probe);
        if (nrk > rk) {
            kept = std::move(probe);
            rk = nrk;
        } else {
            ++res.dropped;
        }
    }
    res.rank = rk;
    res.mat = std::move(kept);
    return res;
}

}  // namespace mdsconv

#endif
