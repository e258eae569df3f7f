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

#ifndef MDSCONV_POLY_HPP
#define MDSCONV_POLY_HPP

#include <vector>

#include "field.hpp"

namespace mdsconv {

/// Univariate polynomial as ascending coefficient list; zero = empty vector.
using Poly = std::vector<uint32_t>;

namespace polyops {

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Poly& p) { return p.empty(); }

/// deg(0) = -1 by convention.
inline int deg(const Poly& p) { return (int)p.size() - 1; }

inline Poly constant(uint32_t c) { return c ? Poly{c} : Poly{}; }

inline uint32_t coeff(const Poly& p, size_t i) { return i < p.size() ? p[i] : 0; }

inline Poly add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(a, i), coeff(b, i));
    trim(r);
    return r;
}

inline Poly neg(const Field& f, const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = f.neg(c);
    return r;
}

inline Poly sub(const Field& f, const Poly& a, const Poly& b) { return add(f, a, neg(f, b)); }

inline Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline Poly scale(const Field& f, const Poly& a, uint32_t s) {
    Poly r = a;
    for (auto& c : r) c = f.mul(c, s);
    trim(r);
    return r;
}

/// x^k * a.
inline Poly shift(const Poly& a, size_t k) {
    if (a.empty()) return {};
    Poly r(a.size() + k, 0);
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

struct DivModResult {
    Poly quot, rem;
};

inline DivModResult divmod(const Field& f, Poly a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly q;
    uint32_t lead_inv = f.inv(b.back());
    while ((int)a.size() >= (int)b.size()) {
        size_t d = a.size() - b.size();
        uint32_t c = f.mul(a.back(), lead_inv);
        if (q.size() < d + 1) q.resize(d + 1, 0);
        q[d] = f.add(q[d], c);
        for (size_t i = 0; i < b.size(); ++i)
            a[d + i] = f.sub(a[d + i], f.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return {q, a};
}

/// Exact quotient; throws if the division leaves a remainder.
inline Poly div_exact(const Field& f, const Poly& a, const Poly& b) {
    auto r = divmod(f, a, b);
    if (!r.rem.empty()) throw InternalError("inexact polynomial division");
    return r.quot;
}

/// Monic gcd; gcd(0,0) = 0.
inline Poly gcd(const Field& f, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = divmod(f, a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = scale(f, a, f.inv(a.back()));
    return a;
}

inline uint32_t eval(const Field& f, const Poly& p, uint32_t x) {
    uint32_t acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

/// Number of nonzero coefficients.
inline uint32_t weight(const Poly& p) {
    uint32_t w = 0;
    for (uint32_t c : p) w += (c != 0);
    return w;
}

}  // namespace polyops
}  // namespace mdsconv

#endif
