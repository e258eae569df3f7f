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

#ifndef MDSCONV_CONVOLUTION_HPP
#define MDSCONV_CONVOLUTION_HPP

#include <optional>
#include <string>

#include "polymat.hpp"

namespace mdsconv {

/// How a free-distance value was certified. MDS claims require an exact kind.
enum class CertKind { ExactTrellis, Sandwich, LowerBound, PureAssumed };

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::ExactTrellis: return "exact-trellis";
        case CertKind::Sandwich: return "sandwich";
        case CertKind::LowerBound: return "lower-bound";
        case CertKind::PureAssumed: return "pure-assumed";
    }
    return "?";
}

struct DistanceCert {
    uint32_t value = 0;
    CertKind kind = CertKind::LowerBound;
    bool exact = false;
    std::vector<Poly> witness;  // codeword achieving `value`, when exact
};

/// Convolutional code (n, k, gamma; m, d_f)_q given by a reduced basic G(D).
struct ConvCode {
    const Field* f = nullptr;
    size_t n = 0, k = 0, gamma = 0, memory = 0;
    PolyMat G;
    std::optional<DistanceCert> df;
};

inline ConvCode make_conv_code(PolyMat g) {
    ConvCode c;
    c.f = g.f;
    c.n = g.cols;
    c.k = g.rows;
    c.gamma = g.degree();
    c.memory = g.memory();
    c.G = std::move(g);
    return c;
}

/// Partition of an expanded parity-check matrix into H_0..H_m (row counts).
struct SplitPlan {
    Mat H;
    std::vector<size_t> boundaries;  // kappa_0, ..., kappa_m
};

/// Lift of a split parity matrix to G(D) = H~_0 + H~_1 D + ... + H~_m D^m,
/// each H~_i padded with zero rows at the bottom to kappa = kappa_0 rows.
/// Verifies the rank hypotheses and that the result is reduced and basic.
inline ConvCode split_and_lift(const SplitPlan& plan, uint64_t minor_budget = 10000000) {
    const Field& f = *plan.H.f;
    size_t total = 0;
    for (size_t b : plan.boundaries) total += b;
    if (total != plan.H.rows || plan.boundaries.empty())
        throw RankConditionViolated("boundaries must partition the rows of H");
    size_t kappa = plan.boundaries[0];
    // slice H into blocks and check rank conditions
    std::vector<Mat> blocks;
    size_t off = 0;
    for (size_t bi = 0; bi < plan.boundaries.size(); ++bi) {
        size_t rows = plan.boundaries[bi];
        Mat blk(f, rows, plan.H.cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < plan.H.cols; ++c) blk.at(r, c) = plan.H.at(off + r, c);
        off += rows;
        size_t rk = rank(blk);
        if (bi == 0 && rk != kappa)
            throw RankConditionViolated("H_0 must have full row rank");
        if (rk > kappa)
            throw RankConditionViolated("rank H_i exceeds kappa");
        blocks.push_back(std::move(blk));
    }
    PolyMat g(f, kappa, plan.H.cols);
    for (size_t d = 0; d < blocks.size(); ++d)
        for (size_t r = 0; r < blocks[d].rows; ++r)
            for (size_t c = 0; c < plan.H.cols; ++c) {
                uint32_t v = blocks[d].at(r, c);
                if (!v) continue;
                Poly& p = g.at(r, c);
                if (p.size() < d + 1) p.resize(d + 1, 0);
                p[d] = v;
            }
    for (auto& p : g.e) polyops::trim(p);
    if (!is_row_reduced(g)) throw NotReducedBasic("lifted matrix is not row reduced");
    bool basic;
    try {
        basic = minor_gcd_is_unit(g, minor_budget);
    } catch (const BudgetExceeded&) {
        throw;
    }
    if (!basic) throw NotReducedBasic("lifted matrix is not basic");
    return make_conv_code(std::move(g));
}

/// Euclidean dual: dimension n-k, generator from the minimal kernel basis.
inline ConvCode euclidean_dual(const ConvCode& c) {
    return make_conv_code(poly_kernel_basis(c.G));
}

/// Hermitian dual over GF(q^2): the Euclidean dual of the coefficient-wise
/// Frobenius conjugate of G.
inline ConvCode hermitian_dual(const ConvCode& c) {
    if (c.f->quadratic_subfield_size() == 0)
        throw FieldNotQuadratic("Hermitian dual needs a quadratic extension field");
    return make_conv_code(poly_kernel_basis(conj(c.G)));
}

enum class InnerForm { Euclidean, Hermitian };

/// V subset of its dual: G(D) * (D^m G'(1/D))^T == 0 with G' = G (Euclidean)
/// or the conjugate of G (Hermitian).
inline bool is_self_orthogonal(const ConvCode& c, InnerForm form) {
    if (form == InnerForm::Hermitian && c.f->quadratic_subfield_size() == 0)
        throw FieldNotQuadratic("Hermitian form needs a quadratic extension field");
    const PolyMat other = form == InnerForm::Hermitian ? conj(c.G) : c.G;
    return is_orthogonal_pair(c.G, other);
}

/// Generalized Singleton bound d_f <= (n-k)(floor(gamma/k)+1) + gamma + 1.
inline uint32_t singleton_bound(size_t n, size_t k, size_t gamma) {
    if (k < 1 || k > n) throw IndexOutOfRange("need 1 <= k <= n");
    return (uint32_t)((n - k) * (gamma / k + 1) + gamma + 1);
}

struct Sandwich {
    uint32_t lower = 0, upper = 0;
    bool exact() const { return lower == upper; }
};

/// min { d_0 + d_m, d } <= d_f^perp <= d.
inline Sandwich distance_sandwich(const std::vector<uint32_t>& d_blocks, uint32_t d) {
    if (d_blocks.size() < 2) throw IndexOutOfRange("need block distances d_0..d_m, m >= 1");
    uint32_t lower = std::min(d_blocks.front() + d_blocks.back(), d);
    return {lower, d};
}

/// d_f attains the generalized Singleton bound (requires an exact certificate).
inline bool is_mds(const ConvCode& c) {
    if (!c.df || !c.df->exact) throw UncertifiedDistance("MDS verdict needs an exact d_f");
    return c.df->value == singleton_bound(c.n, c.k, c.gamma);
}

}  // namespace mdsconv

#endif
