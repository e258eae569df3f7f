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

#ifndef MDSCONV_FIELD_HPP
#define MDSCONV_FIELD_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "errors.hpp"

namespace mdsconv {

/// Exact arithmetic in GF(p^t).
///
/// Elements are encoded as integers sum c_i * p^i of the coefficient vector
/// (c_0..c_{t-1}) over GF(p) with respect to the class of x modulo a fixed
/// primitive polynomial. The modulus is the lexicographically smallest
/// primitive monic polynomial of degree t (coefficients read low-to-high as
/// a base-p integer), so matrices exported from the library are reproducible
/// across runs.
///
/// Instances are interned and immutable; compare by address.
class Field {
  public:
    uint32_t p = 0;                  // prime characteristic
    uint32_t t = 0;                  // extension degree
    uint32_t q = 0;                  // p^t
    std::vector<uint32_t> modulus;   // ascending coefficients, size t+1, monic
    uint32_t generator = 0;          // smallest element of order q-1

    static constexpr uint64_t kSizeLimit = 1u << 20;

    /// Interned field lookup; builds tables on first use.
    static const Field& get(uint32_t p, uint32_t t) {
        static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(p, t);
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto f = std::unique_ptr<Field>(new Field(p, t));
            it = cache.emplace(key, std::move(f)).first;
        }
        return *it->second;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p == 2) return a ^ b;
        uint32_t r = 0, mul = 1;
        for (uint32_t i = 0; i < t; ++i) {
            r += ((a + b) % p) * mul;
            a /= p;
            b /= p;
            mul *= p;
        }
        return r;
    }

    uint32_t neg(uint32_t a) const {
        if (p == 2) return a;
        uint32_t r = 0, mul = 1;
        for (uint32_t i = 0; i < t; ++i) {
            r += ((p - a % p) % p) * mul;
            a /= p;
            mul *= p;
        }
        return r;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) return exp_[log_[a] + log_[b]];
        return mul_slow(a, b);
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        if (!log_.empty()) return exp_[(q - 1) - log_[a]];
        return pow(a, q - 2);
    }

    uint32_t div(uint32_t a, uint32_t b) const {
        if (b == 0) throw DivisionByZero("division by zero");
        return mul(a, inv(b));
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        if (!log_.empty()) {
            uint64_t le = (uint64_t)log_[a] * (e % (q - 1)) % (q - 1);
            return exp_[le];
        }
        uint32_t r = 1;
        e %= (q - 1);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative order of a nonzero element.
    uint32_t order(uint32_t a) const {
        if (a == 0) throw DivisionByZero("order of zero");
        uint32_t ord = q - 1;
        for (uint32_t f : qm1_factors_) {
            while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
        }
        return ord;
    }

    /// q = s^2 for some prime power s: returns s, else 0.
    uint32_t quadratic_subfield_size() const {
        if (t % 2 != 0) return 0;
        uint32_t s = 1;
        for (uint32_t i = 0; i < t / 2; ++i) s *= p;
        return s;
    }

    /// Conjugation a -> a^s over the index-2 subfield GF(s), s = sqrt(q).
    uint32_t conj(uint32_t a) const {
        uint32_t s = quadratic_subfield_size();
        if (s == 0) throw FieldNotQuadratic("conjugation needs even extension degree");
        return pow(a, s);
    }

    bool operator==(const Field& o) const { return this == &o; }

  private:
    std::vector<uint32_t> exp_;           // size 2(q-1), powers of x
    std::vector<uint32_t> log_;           // size q, log_[0] unused
    std::vector<uint32_t> qm1_factors_;   // distinct prime factors of q-1

    Field(uint32_t p_, uint32_t t_) : p(p_), t(t_) {
        if (t < 1) throw SizeLimitExceeded("degree must be >= 1");
        if (!is_prime(p)) throw NonPrimeCharacteristic(std::to_string(p));
        uint64_t qq = 1;
        for (uint32_t i = 0; i < t; ++i) {
            qq *= p;
            if (qq > kSizeLimit) throw SizeLimitExceeded("p^t exceeds 2^20");
        }
        q = (uint32_t)qq;
        qm1_factors_ = prime_factors(q - 1);
        modulus = find_primitive_modulus();
        if (q <= (1u << 16)) build_tables();
        generator = find_generator();
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static std::vector<uint32_t> prime_factors(uint32_t n) {
        std::vector<uint32_t> fs;
        for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
            if (n % d == 0) {
                fs.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) fs.push_back(n);
        return fs;
    }

    // Multiplication of polynomial-basis encodings modulo `modulus`.
    uint32_t mul_slow(uint32_t a, uint32_t b) const {
        std::vector<uint32_t> prod(2 * t, 0);
        std::vector<uint32_t> da(t), db(t);
        for (uint32_t i = 0; i < t; ++i) { da[i] = a % p; a /= p; }
        for (uint32_t i = 0; i < t; ++i) { db[i] = b % p; b /= p; }
        for (uint32_t i = 0; i < t; ++i) {
            if (!da[i]) continue;
            for (uint32_t j = 0; j < t; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        // reduce: x^t = -(m_0 + m_1 x + ... + m_{t-1} x^{t-1})
        for (uint32_t d = 2 * t - 1; d >= t; --d) {
            uint32_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (uint32_t j = 0; j < t; ++j) {
                uint32_t sub = (c * modulus[j]) % p;
                prod[d - t + j] = (prod[d - t + j] + p - sub) % p;
            }
        }
        uint32_t r = 0, mulp = 1;
        for (uint32_t i = 0; i < t; ++i) {
            r += prod[i] * mulp;
            mulp *= p;
        }
        return r;
    }

    // x^e mod f, f monic degree t with ascending coefficients fcoef (size t+1).
    // Polynomials over GF(p) as coefficient vectors of length t.
    static std::vector<uint32_t> modpow_x(uint64_t e, const std::vector<uint32_t>& fcoef,
                                          uint32_t p, uint32_t t) {
        auto mulmod = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
            std::vector<uint32_t> prod(2 * t, 0);
            for (uint32_t i = 0; i < t; ++i) {
                if (!a[i]) continue;
                for (uint32_t j = 0; j < t; ++j)
                    prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
            for (uint32_t d = 2 * t - 1; d >= t && d < 2 * t; --d) {
                uint32_t c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (uint32_t j = 0; j < t; ++j)
                    prod[d - t + j] = (prod[d - t + j] + p - (c * fcoef[j]) % p) % p;
            }
            prod.resize(t);
            return prod;
        };
        std::vector<uint32_t> base(t, 0), acc(t, 0);
        acc[0] = 1;
        if (t == 1) {
            base[0] = (p - fcoef[0] % p) % p;  // x = -f_0
        } else {
            base[1] = 1;
        }
        while (e) {
            if (e & 1) acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return acc;
    }

    // f primitive <=> f(0) != 0 and the class of x has order exactly q-1.
    bool is_primitive_modulus(const std::vector<uint32_t>& fcoef) const {
        if (fcoef[0] == 0) return false;
        auto one = std::vector<uint32_t>(t, 0);
        one[0] = 1;
        if (modpow_x(q - 1, fcoef, p, t) != one) return false;
        for (uint32_t f : qm1_factors_)
            if (modpow_x((q - 1) / f, fcoef, p, t) == one) return false;
        return true;
    }

    std::vector<uint32_t> find_primitive_modulus() const {
        for (uint32_t code = 0; code < q; ++code) {
            std::vector<uint32_t> fcoef(t + 1, 0);
            uint32_t c = code;
            for (uint32_t i = 0; i < t; ++i) { fcoef[i] = c % p; c /= p; }
            fcoef[t] = 1;
            if (is_primitive_modulus(fcoef)) return fcoef;
        }
        throw InternalError("no primitive polynomial found");
    }

    void build_tables() {
        exp_.assign(2 * (q - 1), 0);
        log_.assign(q, 0);
        // the class of x is a generator because the modulus is primitive
        uint32_t x = (t == 1) ? (p - modulus[0] % p) % p : p;
        uint32_t cur = 1;
        for (uint32_t i = 0; i < q - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_slow(cur, x);
        }
        if (cur != 1) throw InternalError("modulus not primitive");
        for (uint32_t i = 0; i < q - 1; ++i) exp_[q - 1 + i] = exp_[i];
    }

    uint32_t find_generator() const {
        for (uint32_t v = 1; v < q; ++v)
            if (order(v) == q - 1) return v;
        throw InternalError("no generator");
    }
};

/// make_field(p, t): interned GF(p^t) with the canonical primitive modulus.
inline const Field& make_field(uint32_t p, uint32_t t) { return Field::get(p, t); }

inline void require_same_field(const Field& a, const Field& b) {
    if (&a != &b) throw FieldMismatch("elements of different fields");
}

/// alpha with multiplicative order exactly n; deterministic: generator^((q-1)/n).
inline uint32_t primitive_nth_root(uint32_t n, const Field& ext) {
    if (n == 0 || (ext.q - 1) % n != 0)
        throw NoSuchRoot("n does not divide q-1");
    return ext.pow(ext.generator, (ext.q - 1) / n);
}

/// Embedding of GF(q) into GF(q^l), l in {1,2}, with basis {1, g_ext}.
///
/// The base field is mapped through the smallest root of its modulus inside
/// the extension, so embed is a ring homomorphism and project(embed(a)) = a.
class Embedding {
  public:
    const Field* base;
    const Field* ext;
    uint32_t l;

    static const Embedding& get(const Field& base, const Field& ext) {
        static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(&base, &ext);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<Embedding>(new Embedding(base, ext))).first;
        return *it->second;
    }

    uint32_t embed(uint32_t a) const { return embed_tab_[a]; }

    bool in_base(uint32_t e) const { return project_tab_[e] >= 0; }

    uint32_t project(uint32_t e) const {
        if (project_tab_[e] < 0)
            throw CoefficientNotInBaseField("value " + std::to_string(e));
        return (uint32_t)project_tab_[e];
    }

    /// Coordinates (c0, c1) over beta = {1, g_ext}, as base-field values:
    /// e = embed(c0) + embed(c1) * g_ext. For l = 1: (e, 0).
    std::array<uint32_t, 2> coords(uint32_t e) const {
        if (l == 1) return {e, 0};
        return coord_tab_[e];
    }

    /// a^q where q is the base field size (the Frobenius fixing the base).
    uint32_t frobenius(uint32_t a) const { return ext->pow(a, base->q); }

  private:
    std::vector<uint32_t> embed_tab_;
    std::vector<int32_t> project_tab_;
    std::vector<std::array<uint32_t, 2>> coord_tab_;

    Embedding(const Field& b, const Field& e) : base(&b), ext(&e) {
        if (&b == &e) {
            l = 1;
            embed_tab_.resize(b.q);
            project_tab_.resize(b.q);
            for (uint32_t v = 0; v < b.q; ++v) {
                embed_tab_[v] = v;
                project_tab_[v] = (int32_t)v;
            }
            return;
        }
        if (e.p != b.p || e.t != 2 * b.t)
            throw FieldMismatch("extension must be the quadratic extension of the base");
        l = 2;
        // smallest root of the base modulus inside the extension
        uint32_t root = 0;
        bool found = false;
        for (uint32_t cand = 0; cand < e.q && !found; ++cand) {
            uint32_t acc = 0;
            for (uint32_t i = b.t + 1; i-- > 0;)
                acc = e.add(e.mul(acc, cand), b.modulus[i] % b.p);
            if (acc == 0) {
                root = cand;
                found = true;
            }
        }
        if (!found) throw InternalError("base modulus has no root in extension");
        embed_tab_.resize(b.q);
        for (uint32_t v = 0; v < b.q; ++v) {
            uint32_t acc = 0, vv = v;
            std::vector<uint32_t> digits(b.t);
            for (uint32_t i = 0; i < b.t; ++i) { digits[i] = vv % b.p; vv /= b.p; }
            for (uint32_t i = b.t; i-- > 0;)
                acc = e.add(e.mul(acc, root), digits[i]);
            embed_tab_[v] = acc;
        }
        project_tab_.assign(e.q, -1);
        for (uint32_t v = 0; v < b.q; ++v) project_tab_[embed_tab_[v]] = (int32_t)v;
        coord_tab_.assign(e.q, {0, 0});
        std::vector<bool> seen(e.q, false);
        uint32_t g = e.generator;
        for (uint32_t c1 = 0; c1 < b.q; ++c1) {
            uint32_t part = e.mul(embed_tab_[c1], g);
            for (uint32_t c0 = 0; c0 < b.q; ++c0) {
                uint32_t val = e.add(embed_tab_[c0], part);
                if (seen[val]) throw InternalError("{1, g} not a basis");
                seen[val] = true;
                coord_tab_[val] = {c0, c1};
            }
        }
    }
};

}  // namespace mdsconv

#endif
