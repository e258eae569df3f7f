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

#ifndef MDSCONV_CYCLIC_HPP
#define MDSCONV_CYCLIC_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace mdsconv {

/// Orbit of s under multiplication by q modulo n.
struct CyclotomicCoset {
    uint32_t n = 0, q = 0;
    uint32_t rep = 0;                 // smallest member
    std::vector<uint32_t> elements;   // sorted
};

inline CyclotomicCoset coset(uint32_t n, uint32_t q, uint32_t s) {
    if (std::gcd(n, q) != 1) throw NotCoprime("gcd(n, q) != 1");
    CyclotomicCoset c;
    c.n = n;
    c.q = q;
    std::set<uint32_t> orbit;
    uint64_t cur = s % n;
    while (orbit.insert((uint32_t)cur).second) cur = cur * q % n;
    c.elements.assign(orbit.begin(), orbit.end());
    c.rep = c.elements.front();
    return c;
}

/// Smallest l >= 1 with q^l = 1 mod n.
inline uint32_t mult_order(uint32_t n, uint32_t q) {
    if (std::gcd(n, q) != 1) throw NotCoprime("gcd(n, q) != 1");
    if (n == 1) return 1;
    uint64_t cur = q % n;
    for (uint32_t l = 1; l <= n; ++l) {
        if (cur == 1) return l;
        cur = cur * q % n;
    }
    throw InternalError("order not found");
}

/// M^(s)(x) = prod over the coset of s of (x - alpha^j), projected to the
/// base field of the embedding.
inline Poly minimal_polynomial(uint32_t s, uint32_t n, const Embedding& emb, uint32_t alpha) {
    const Field& ext = *emb.ext;
    const Field& base = *emb.base;
    CyclotomicCoset c = coset(n, base.q, s);
    Poly acc{1};  // over ext
    for (uint32_t j : c.elements) {
        Poly lin{ext.neg(ext.pow(alpha, j)), 1};
        acc = polyops::mul(ext, acc, lin);
    }
    Poly out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = emb.project(acc[i]);
    return out;
}

/// BCH code description: defining set, generator polynomial, designed distance.
struct BchSpec {
    uint32_t n = 0;
    const Field* field = nullptr;
    uint32_t b = 0;       // start of the longest consecutive run in Z
    uint32_t delta = 1;   // designed distance = run length + 1
    std::vector<uint32_t> Z;  // sorted union of cosets
    Poly g;               // generator polynomial over the base field
    uint32_t k = 0;       // n - |Z|
};

/// Longest cyclic run of consecutive exponents present in Z (mod n);
/// returns {start, length}.
inline std::pair<uint32_t, uint32_t> longest_consecutive_run(const std::vector<uint32_t>& z,
                                                            uint32_t n) {
    if (z.empty()) return {0, 0};
    std::vector<bool> in(n, false);
    for (uint32_t v : z) in[v % n] = true;
    if (z.size() >= n) return {0, n};
    uint32_t best_len = 0, best_start = 0;
    for (uint32_t s = 0; s < n; ++s) {
        if (in[(s + n - 1) % n]) continue;  // runs begin after a gap
        if (!in[s]) continue;
        uint32_t len = 0;
        while (in[(s + len) % n]) ++len;
        if (len > best_len) {
            best_len = len;
            best_start = s;
        }
    }
    return {best_start, best_len};
}

/// delta = longest consecutive run length + 1 (BCH lower bound on distance).
inline uint32_t bch_bound(const std::vector<uint32_t>& z, uint32_t n) {
    return longest_consecutive_run(z, n).second + 1;
}

/// BCH code from coset representatives: g = product of the minimal
/// polynomials, Z = union of the cosets.
inline BchSpec bch_code(uint32_t n, const Field& field, const std::vector<uint32_t>& reps,
                        const Embedding& emb, uint32_t alpha) {
    if (std::gcd(n, field.q) != 1) throw NotCoprime("gcd(n, q) != 1");
    BchSpec spec;
    spec.n = n;
    spec.field = &field;
    std::set<uint32_t> z;
    spec.g = Poly{1};
    std::set<uint32_t> done;
    for (uint32_t r : reps) {
        CyclotomicCoset c = coset(n, field.q, r);
        if (!done.insert(c.rep).second) continue;  // cosets are disjoint, skip dups
        z.insert(c.elements.begin(), c.elements.end());
        spec.g = polyops::mul(field, spec.g, minimal_polynomial(c.rep, n, emb, alpha));
    }
    spec.Z.assign(z.begin(), z.end());
    spec.k = n - (uint32_t)spec.Z.size();
    auto run = longest_consecutive_run(spec.Z, n);
    spec.b = run.first;
    spec.delta = run.second + 1;
    return spec;
}

/// Vandermonde-style parity rows alpha^{r j} for the given exponents (in the
/// given order), expanded over the embedding basis, dependent rows dropped
/// top-down.
inline ExpandResult bch_parity_matrix(const std::vector<uint32_t>& row_exponents, uint32_t n,
                                      const Embedding& emb, uint32_t alpha,
                                      bool drop_dependent = true) {
    const Field& ext = *emb.ext;
    Mat m(ext, row_exponents.size(), n);
    for (size_t r = 0; r < row_exponents.size(); ++r) {
        uint32_t base = ext.pow(alpha, row_exponents[r]);
        uint32_t cur = 1;
        for (uint32_t j = 0; j < n; ++j) {
            m.at(r, j) = cur;
            cur = ext.mul(cur, base);
        }
    }
    return expand_over_basis(m, emb, drop_dependent);
}

}  // namespace mdsconv

#endif
