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

#ifndef MDSCONV_QUANTUM_HPP
#define MDSCONV_QUANTUM_HPP

#include <set>

#include "convolution.hpp"

namespace mdsconv {

/// Convolutional stabilizer code [(n, k, m; gamma, d_f)]_q given by
/// S(D) = (X(D) | Z(D)) over GF(q).
struct StabilizerCode {
    const Field* f = nullptr;  // GF(q), the base field
    size_t n = 0, k = 0, memory = 0, gamma = 0;
    PolyMat X, Z;
    std::optional<DistanceCert> df;
};

/// Defining-set criterion for C^{perp_h} subset of C over GF(q^2):
/// Z must avoid -q*Z mod n. Z itself must be closed under multiplication
/// by q^2 mod n (i.e. be a union of q^2-ary cyclotomic cosets).
inline bool hermitian_dual_containing(const std::vector<uint32_t>& z, uint32_t n,
                                      const Field& ext) {
    uint32_t qb = ext.quadratic_subfield_size();
    if (qb == 0) throw FieldNotQuadratic("defining-set criterion needs GF(q^2)");
    std::set<uint32_t> zs;
    for (uint32_t v : z) zs.insert(v % n);
    for (uint32_t v : zs)
        if (!zs.count((uint32_t)((uint64_t)v * ext.q % n)))
            throw NotCosetClosed("defining set not closed under multiplication by q^2");
    for (uint32_t v : zs) {
        uint32_t neg_q_v = (uint32_t)((n - (uint64_t)v * qb % n) % n);
        if (zs.count(neg_q_v)) return false;
    }
    return true;
}

namespace detail {

/// D^mem * M(1/D) at an explicitly chosen clearing power.
inline PolyMat reverse_at(const PolyMat& m, size_t mem) {
    if (m.memory() > mem) throw IndexOutOfRange("clearing power below matrix memory");
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

inline PolyMat sub(const PolyMat& a, const PolyMat& b) {
    if (a.f != b.f || a.rows != b.rows || a.cols != b.cols)
        throw FieldMismatch("incompatible difference");
    PolyMat r(*a.f, a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = polyops::sub(*a.f, a.e[i], b.e[i]);
    return r;
}

}  // namespace detail

/// X(D) Z(1/D)^T - Z(D) X(1/D)^T == 0 after clearing powers of D.
inline bool symplectic_identity_holds(const PolyMat& x, const PolyMat& z) {
    size_t mem = std::max(x.memory(), z.memory());
    PolyMat t1 = mul_abt(x, detail::reverse_at(z, mem));
    PolyMat t2 = mul_abt(z, detail::reverse_at(x, mem));
    return all_zero(detail::sub(t1, t2));
}

/// Stabilizer lift of a Hermitian self-orthogonal code V over GF(q^2):
/// the GF(q)-row space of S is the beta-expansion of span{g_j, omega*g_j}
/// over the basis beta = {1, omega} (omega = the canonical generator of
/// GF(q^2)); X = coordinate-0 block, Z = coordinate-1 block. The symplectic
/// identity and the rank of S are verified; failure is a hard error.
///
/// `dual_df`: certified free distance of the Hermitian dual; reported as the
/// stabilizer code's d_f under the pure-code convention.
inline StabilizerCode stabilizer_from_hermitian(const ConvCode& v, const Embedding& emb,
                                                std::optional<DistanceCert> dual_df = std::nullopt) {
    if (v.f != emb.ext || emb.l != 2)
        throw FieldMismatch("code field must be the quadratic extension of the embedding");
    const Field& ext = *emb.ext;
    const Field& base = *emb.base;
    if (v.k > 0 && !is_self_orthogonal(v, InnerForm::Hermitian))
        throw NotHermitianSelfOrthogonal("V is not contained in its Hermitian dual");

    size_t n = v.n;
    uint32_t omega = ext.generator;
    StabilizerCode s;
    s.f = &base;
    s.n = n;
    s.k = n - 2 * v.k;
    s.X = PolyMat(base, 2 * v.k, n);
    s.Z = PolyMat(base, 2 * v.k, n);
    for (size_t j = 0; j < v.k; ++j) {
        for (size_t c = 0; c < n; ++c) {
            const Poly& p = v.G.at(j, c);
            Poly x0, z0, x1, z1;  // expansions of g_j and omega*g_j
            for (size_t d = 0; d < p.size(); ++d) {
                uint32_t val = p[d];
                auto cw = emb.coords(val);
                auto cwo = emb.coords(ext.mul(omega, val));
                auto put = [&](Poly& dst, uint32_t coeffv) {
                    if (!coeffv) return;
                    if (dst.size() < d + 1) dst.resize(d + 1, 0);
                    dst[d] = coeffv;
                };
                put(x0, cw[0]);
                put(z0, cw[1]);
                put(x1, cwo[0]);
                put(z1, cwo[1]);
            }
            s.X.at(2 * j, c) = std::move(x0);
            s.Z.at(2 * j, c) = std::move(z0);
            s.X.at(2 * j + 1, c) = std::move(x1);
            s.Z.at(2 * j + 1, c) = std::move(z1);
        }
    }
    if (!symplectic_identity_holds(s.X, s.Z))
        throw SymplecticCheckFailed("stabilizer rows are not symplectically orthogonal");
    {
        PolyMat full(base, 2 * v.k, 2 * n);
        for (size_t r = 0; r < 2 * v.k; ++r)
            for (size_t c = 0; c < n; ++c) {
                full.at(r, c) = s.X.at(r, c);
                full.at(r, n + c) = s.Z.at(r, c);
            }
        if (poly_rank(full) != 2 * v.k)
            throw SymplecticCheckFailed("stabilizer matrix is rank deficient");
    }
    s.gamma = v.gamma;
    s.memory = v.memory;
    if (dual_df) {
        DistanceCert d = *dual_df;
        d.kind = CertKind::PureAssumed;
        s.df = std::move(d);
    }
    return s;
}

/// d_f <= (n-k)/2 * (floor(2 gamma / (n+k)) + 1) + gamma + 1.
inline uint32_t quantum_singleton_bound(size_t n, size_t k, size_t gamma) {
    if (k > n) throw IndexOutOfRange("need k <= n");
    if ((n - k) % 2 != 0) throw ParityViolation("n - k must be even");
    return (uint32_t)((n - k) / 2 * (2 * gamma / (n + k) + 1) + gamma + 1);
}

/// d_f attains the quantum Singleton bound (requires an exact certificate).
inline bool is_quantum_mds(const StabilizerCode& s) {
    if (!s.df || !s.df->exact)
        throw UncertifiedDistance("quantum MDS verdict needs an exact d_f");
    return s.df->value == quantum_singleton_bound(s.n, s.k, s.gamma);
}

}  // namespace mdsconv

#endif
