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

#ifndef MDSCONV_DISTANCE_HPP
#define MDSCONV_DISTANCE_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "convolution.hpp"

namespace mdsconv {

struct SearchBudget {
    uint64_t states = 1000000;        // trellis state-space bound
    uint64_t enumeration = 100000000; // codeword / support enumeration bound

    static SearchBudget from_env() {
        SearchBudget b;
        if (const char* s = std::getenv("MDSCONV_BUDGET")) {
            uint64_t v = std::strtoull(s, nullptr, 10);
            if (v > 0) b.enumeration = v;
        }
        return b;
    }
};

/// Symbol weight of a polynomial vector: total nonzero coefficients.
inline uint32_t symbol_weight(const std::vector<Poly>& v) {
    uint32_t w = 0;
    for (const Poly& p : v) w += polyops::weight(p);
    return w;
}

/// Exact block minimum distance by enumerating all q^k codewords.
inline uint32_t block_min_distance_exhaustive(const Mat& gen,
                                              const SearchBudget& budget = SearchBudget{}) {
    const Field& f = *gen.f;
    size_t k = gen.rows, n = gen.cols;
    double total = 1;
    for (size_t i = 0; i < k; ++i) total *= f.q;
    if (total > (double)budget.enumeration) throw BudgetExceeded("q^k enumeration over budget");
    uint32_t best = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> msg(k, 0);
    while (true) {
        // advance odometer; index 0 state skipped as the zero codeword
        size_t i = 0;
        while (i < k && msg[i] == f.q - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        uint32_t w = 0;
        for (size_t c = 0; c < n; ++c) {
            uint32_t acc = 0;
            for (size_t r = 0; r < k; ++r)
                if (msg[r]) acc = f.add(acc, f.mul(msg[r], gen.at(r, c)));
            w += (acc != 0);
        }
        best = std::min(best, w);
    }
    return best;
}

inline uint32_t det(const Mat& m) {
    const Field& f = *m.f;
    Mat a = m;
    size_t n = a.rows;
    uint32_t d = 1;
    for (size_t r = 0; r < n; ++r) {
        size_t piv = r;
        while (piv < n && a.at(piv, r) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != r) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
            d = f.neg(d);
        }
        d = f.mul(d, a.at(r, r));
        uint32_t inv = f.inv(a.at(r, r));
        for (size_t i = r + 1; i < n; ++i) {
            uint32_t c = f.mul(a.at(i, r), inv);
            if (!c) continue;
            for (size_t j = r; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(r, j)));
        }
    }
    return d;
}

struct MdsCertificate {
    bool mds = false;
    std::vector<size_t> counterexample_cols;  // a singular (n-k)-column subset
};

/// Singleton-equality proof: every (n-k)-column submatrix of the parity
/// matrix is nonsingular (so d = n-k+1), or a counterexample column set.
inline MdsCertificate mds_minors(const Mat& h, const SearchBudget& budget = SearchBudget{}) {
    size_t r = h.rows, n = h.cols;
    if (rank(h) != r) throw RankDeficient("parity matrix must have full row rank");
    if (detail::binom(n, r, 10000000) > std::min<uint64_t>(10000000, budget.enumeration))
        throw BudgetExceeded("column-minor enumeration over budget");
    std::vector<size_t> sel(r);
    for (size_t i = 0; i < r; ++i) sel[i] = i;
    const Field& f = *h.f;
    while (true) {
        Mat sub(f, r, r);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) sub.at(i, j) = h.at(i, sel[j]);
        if (det(sub) == 0) return {false, sel};
        bool advanced = false;
        size_t i = r;
        while (i-- > 0) {
            if (sel[i] != i + n - r) {
                ++sel[i];
                for (size_t j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return {true, {}};
}

namespace detail {

/// Encoder-state helpers for the generator trellis: the state stores, per
/// generator row i, the last gamma_i inputs.
struct GenTrellisShape {
    size_t k = 0, gamma = 0;
    uint32_t q = 0;
    std::vector<size_t> row_deg;
    std::vector<size_t> offset;  // state cell offset per row

    explicit GenTrellisShape(const PolyMat& g) {
        k = g.rows;
        q = g.f->q;
        row_deg.resize(k);
        offset.resize(k);
        for (size_t i = 0; i < k; ++i) {
            row_deg[i] = g.row_degree(i);
            offset[i] = gamma;
            gamma += row_deg[i];
        }
    }

    uint64_t state_count() const {
        uint64_t s = 1;
        for (size_t i = 0; i < gamma; ++i) s *= q;
        return s;
    }
};

inline std::vector<uint32_t> decode_radix(uint64_t idx, uint32_t q, size_t len) {
    std::vector<uint32_t> v(len);
    for (size_t i = 0; i < len; ++i) {
        v[i] = (uint32_t)(idx % q);
        idx /= q;
    }
    return v;
}

inline uint64_t encode_radix(const std::vector<uint32_t>& v, uint32_t q) {
    uint64_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
    return idx;
}

}  // namespace detail

/// Exact free distance by least-weight-path search over the encoder state
/// space (exact for non-catastrophic encoders; weights are nonnegative).
/// The witness codeword is stored in the certificate.
inline DistanceCert free_distance_generator_trellis(const ConvCode& code,
                                                    const SearchBudget& budget = SearchBudget{}) {
    const Field& f = *code.f;
    const PolyMat& g = code.G;
    detail::GenTrellisShape shape(g);
    uint64_t nstates = shape.state_count();
    if (nstates > budget.states) throw BudgetExceeded("generator trellis state space");
    uint64_t ninputs = 1;
    for (size_t i = 0; i < shape.k; ++i) {
        ninputs *= f.q;
        if (ninputs > budget.states) throw BudgetExceeded("generator trellis branch count");
    }
    {
        bool basic = true;
        try {
            basic = minor_gcd_is_unit(g);
        } catch (const BudgetExceeded&) {
            // caller vouches for basicness on instances too large to re-check
        }
        if (!basic) throw CatastrophicEncoder("generator matrix has no polynomial right inverse");
    }

    size_t n = code.n;
    // output contribution of the current input (degree-0 coefficients), flat
    std::vector<uint32_t> in_contrib(ninputs * n, 0);
    for (uint64_t u = 0; u < ninputs; ++u) {
        auto msg = detail::decode_radix(u, f.q, shape.k);
        for (size_t c = 0; c < n; ++c) {
            uint32_t acc = 0;
            for (size_t i = 0; i < shape.k; ++i)
                if (msg[i]) acc = f.add(acc, f.mul(msg[i], polyops::coeff(g.at(i, c), 0)));
            in_contrib[u * n + c] = acc;
        }
    }

    const uint32_t INF = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> dist(nstates, INF);
    std::vector<std::pair<uint64_t, uint64_t>> parent(nstates, {UINT64_MAX, 0});
    using QE = std::pair<uint32_t, uint64_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    dist[0] = 0;
    pq.push({0, 0});
    uint32_t best = INF;
    std::pair<uint64_t, uint64_t> best_last{UINT64_MAX, 0};  // (pre-terminal state, input)
    std::vector<bool> settled(nstates, false);

    while (!pq.empty()) {
        auto [d0, s] = pq.top();
        pq.pop();
        if (d0 >= best) break;
        if (settled[s]) continue;
        settled[s] = true;
        auto cells = detail::decode_radix(s, f.q, shape.gamma);
        // state contribution to the output
        std::vector<uint32_t> base(n, 0);
        for (size_t c = 0; c < n; ++c) {
            uint32_t acc = 0;
            for (size_t i = 0; i < shape.k; ++i)
                for (size_t dd = 1; dd <= shape.row_deg[i]; ++dd) {
                    uint32_t cell = cells[shape.offset[i] + dd - 1];
                    if (cell) acc = f.add(acc, f.mul(cell, polyops::coeff(g.at(i, c), dd)));
                }
            base[c] = acc;
        }
        for (uint64_t u = 0; u < ninputs; ++u) {
            if (s == 0 && u == 0) continue;  // exclude the all-zero loop
            uint32_t w = 0;
            for (size_t c = 0; c < n; ++c) w += (f.add(base[c], in_contrib[u * n + c]) != 0);
            uint32_t nd = d0 + w;
            if (nd >= best) continue;
            // next state: shift each row register, new input in front
            auto msg = detail::decode_radix(u, f.q, shape.k);
            std::vector<uint32_t> ncells(shape.gamma, 0);
            for (size_t i = 0; i < shape.k; ++i) {
                size_t gd = shape.row_deg[i];
                if (gd == 0) continue;
                ncells[shape.offset[i]] = msg[i];
                for (size_t dd = 1; dd < gd; ++dd)
                    ncells[shape.offset[i] + dd] = cells[shape.offset[i] + dd - 1];
            }
            uint64_t ns = detail::encode_radix(ncells, f.q);
            if (ns == 0) {
                if (nd < best) {
                    best = nd;
                    best_last = {s, u};
                }
                continue;
            }
            if (nd < dist[ns]) {
                dist[ns] = nd;
                parent[ns] = {s, u};
                pq.push({nd, ns});
            }
        }
    }
    if (best == INF) throw InternalError("no nonzero codeword found");

    // reconstruct the input sequence and the witness codeword
    std::vector<uint64_t> inputs{best_last.second};
    uint64_t cur = best_last.first;
    while (cur != 0) {
        inputs.push_back(parent[cur].second);
        cur = parent[cur].first;
    }
    std::reverse(inputs.begin(), inputs.end());
    std::vector<Poly> u_poly(shape.k);
    for (size_t t = 0; t < inputs.size(); ++t) {
        auto msg = detail::decode_radix(inputs[t], f.q, shape.k);
        for (size_t i = 0; i < shape.k; ++i) {
            if (!msg[i]) continue;
            if (u_poly[i].size() < t + 1) u_poly[i].resize(t + 1, 0);
            u_poly[i][t] = msg[i];
        }
    }
    std::vector<Poly> witness(n);
    for (size_t c = 0; c < n; ++c) {
        Poly acc;
        for (size_t i = 0; i < shape.k; ++i)
            acc = polyops::add(f, acc, polyops::mul(f, u_poly[i], g.at(i, c)));
        witness[c] = std::move(acc);
    }
    if (symbol_weight(witness) != best) throw InternalError("witness weight mismatch");
    return {best, CertKind::ExactTrellis, true, std::move(witness)};
}

namespace detail {

/// Frame-granular syndrome-former search context. The state is the memory
/// contents of the syndrome former: per check row i, the pending
/// contributions to the next gamma_i frame syndromes.
struct SyndromeTrellis {
    const Field* f;
    size_t n, rho, gamma;
    std::vector<size_t> row_deg;
    std::vector<size_t> offset;
    // rev[i][e] = coefficient row e of D^{gamma_i} r_i(1/D), e = 0..gamma_i
    std::vector<std::vector<std::vector<uint32_t>>> rev;

    SyndromeTrellis(const PolyMat& check) : f(check.f), n(check.cols), rho(check.rows), gamma(0) {
        row_deg.resize(rho);
        offset.resize(rho);
        rev.resize(rho);
        for (size_t i = 0; i < rho; ++i) {
            row_deg[i] = check.row_degree(i);
            offset[i] = gamma;
            gamma += row_deg[i];
            rev[i].assign(row_deg[i] + 1, std::vector<uint32_t>(n, 0));
            for (size_t e = 0; e <= row_deg[i]; ++e)
                for (size_t j = 0; j < n; ++j)
                    rev[i][e][j] = polyops::coeff(check.at(i, j), row_deg[i] - e);
        }
    }

    uint64_t state_count() const {
        uint64_t s = 1;
        for (size_t i = 0; i < gamma; ++i) s *= f->q;
        return s;
    }

    // pending(state)[offset[i] + e - 1] = contribution owed to syndrome i at
    // frame distance e (e = 1..gamma_i)
};

struct FrameEdge {
    std::vector<uint32_t> frame;  // v, length n
    uint64_t next_state;
};

}  // namespace detail

/// Exact free distance via the syndrome-former trellis of a polynomial check
/// matrix (the generator of the dual code). Needed for high-rate codes whose
/// generator trellises have too many branches. The search is frame-granular:
/// from each settled state, frame contents are enumerated in weight layers by
/// support, solving the per-frame syndrome constraints; the state space is
/// q^{gamma_check}.
///
/// `upper_hint`: a known codeword weight (e.g. from a block-code witness);
/// the search then only has to rule out anything lighter.
inline DistanceCert free_distance_syndrome_trellis(
    const ConvCode& code, const PolyMat& check,
    std::optional<std::pair<uint32_t, std::vector<Poly>>> upper_hint = std::nullopt,
    const SearchBudget& budget = SearchBudget{}) {
    const Field& f = *code.f;
    if (check.f != &f || check.cols != code.n || check.rows + code.k != code.n ||
        !is_orthogonal_pair(code.G, check) || poly_rank(check) != check.rows)
        throw InvalidCheckMatrix("check matrix is not a dual generator for the code");

    detail::SyndromeTrellis st(check);
    uint64_t nstates = st.state_count();
    if (nstates > budget.states) throw BudgetExceeded("syndrome trellis state space");
    size_t n = st.n, rho = st.rho, gamma = st.gamma;
    const uint32_t INF = std::numeric_limits<uint32_t>::max();

    uint32_t ub = INF;  // exclusive: searching for codewords of weight < ub
    std::vector<Poly> ub_witness;
    if (upper_hint) {
        // verify the hint is a codeword of the stated weight
        PolyMat w(f, 1, n);
        for (size_t j = 0; j < n; ++j) w.at(0, j) = upper_hint->second[j];
        if (!is_orthogonal_pair(w, check) || symbol_weight(upper_hint->second) != upper_hint->first)
            throw InvalidCheckMatrix("upper-bound witness is not a codeword of that weight");
        ub = upper_hint->first;  // only anything strictly lighter matters
        ub_witness = upper_hint->second;
    }

    std::vector<uint32_t> dist(nstates, INF);
    struct Parent {
        uint64_t prev = UINT64_MAX;
        std::vector<uint32_t> frame;
    };
    std::vector<Parent> parent(nstates);
    std::vector<bool> settled(nstates, false);

    // queue entries: (priority, state, layer). layer==0 is a node arrival;
    // layer==w>0 asks to enumerate weight-w frames out of a settled state.
    using QE = std::tuple<uint32_t, uint64_t, uint32_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    dist[0] = 0;
    pq.push({0, 0, 0});
    uint32_t best = INF;
    std::vector<uint32_t> best_final_frame;
    uint64_t best_prev = UINT64_MAX;
    uint64_t supports_used = 0;

    auto pending_of = [&](uint64_t s) { return detail::decode_radix(s, f.q, gamma); };

    // relax an edge (s, frame) -> ns with total weight nd
    auto relax = [&](uint64_t s, uint32_t nd, const std::vector<uint32_t>& frame, uint64_t ns) {
        if (nd >= ub || nd >= best) return;
        if (ns == 0) {
            if (nd > 0 && nd < best) {
                best = nd;
                best_final_frame = frame;
                best_prev = s;
            }
            return;
        }
        if (nd < dist[ns]) {
            dist[ns] = nd;
            parent[ns] = {s, frame};
            pq.push({nd, ns, 0});
        }
    };

    // enumerate weight-w frames out of state s (constrained to land on the
    // zero state when `terminal_only`)
    auto expand_layer = [&](uint64_t s, uint32_t d0, uint32_t w, bool terminal_only) {
        auto pend = pending_of(s);
        // constraints: frame syndrome rows first, then (if terminal) the
        // pending-flush rows
        std::vector<const std::vector<uint32_t>*> cons_rows;
        std::vector<uint32_t> rhs;
        for (size_t i = 0; i < rho; ++i) {
            cons_rows.push_back(&st.rev[i][0]);
            uint32_t owed = st.row_deg[i] >= 1 ? pend[st.offset[i]] : 0;
            rhs.push_back(f.neg(owed));
        }
        if (terminal_only) {
            for (size_t i = 0; i < rho; ++i)
                for (size_t e = 1; e <= st.row_deg[i]; ++e) {
                    cons_rows.push_back(&st.rev[i][e]);
                    uint32_t owed = (st.offset[i] + e < st.offset[i] + st.row_deg[i])
                                        ? pend[st.offset[i] + e]
                                        : 0;
                    rhs.push_back(f.neg(owed));
                }
        }
        size_t ncons = cons_rows.size();

        std::vector<size_t> sel(w);
        std::vector<uint32_t> vals(w);
        // iterate over supports of size w
        std::function<void(size_t, size_t)> rec_support = [&](size_t idx, size_t from) {
            if (idx == w) {
                if (++supports_used > budget.enumeration)
                    throw BudgetExceeded("syndrome trellis support enumeration");
                // solve cons * v_S = rhs on the support
                size_t rows = ncons, colsn = w;
                std::vector<std::vector<uint32_t>> a(rows, std::vector<uint32_t>(colsn + 1, 0));
                for (size_t i = 0; i < rows; ++i) {
                    for (size_t j = 0; j < colsn; ++j) a[i][j] = (*cons_rows[i])[sel[j]];
                    a[i][colsn] = rhs[i];
                }
                // gaussian elimination
                std::vector<size_t> pivot_col;
                size_t r = 0;
                for (size_t c = 0; c < colsn && r < rows; ++c) {
                    size_t piv = r;
                    while (piv < rows && a[piv][c] == 0) ++piv;
                    if (piv == rows) continue;
                    std::swap(a[piv], a[r]);
                    uint32_t inv = f.inv(a[r][c]);
                    for (size_t j = c; j <= colsn; ++j) a[r][j] = f.mul(a[r][j], inv);
                    for (size_t i = 0; i < rows; ++i) {
                        if (i == r) continue;
                        uint32_t cc = a[i][c];
                        if (!cc) continue;
                        for (size_t j = c; j <= colsn; ++j)
                            a[i][j] = f.sub(a[i][j], f.mul(cc, a[r][j]));
                    }
                    pivot_col.push_back(c);
                    ++r;
                }
                for (size_t i = r; i < rows; ++i)
                    if (a[i][colsn] != 0) return;  // inconsistent
                std::vector<size_t> free_cols;
                {
                    std::vector<bool> isp(colsn, false);
                    for (size_t c : pivot_col) isp[c] = true;
                    for (size_t c = 0; c < colsn; ++c)
                        if (!isp[c]) free_cols.push_back(c);
                }
                uint64_t sols = 1;
                for (size_t i = 0; i < free_cols.size(); ++i) {
                    sols *= f.q;
                    if (sols > 1000000) throw BudgetExceeded("per-support solution family");
                }
                std::vector<uint32_t> freev(free_cols.size(), 0);
                for (uint64_t it = 0; it < sols; ++it) {
                    // decode free assignment
                    uint64_t x = it;
                    for (size_t i = 0; i < freev.size(); ++i) {
                        freev[i] = (uint32_t)(x % f.q);
                        x /= f.q;
                    }
                    bool ok = true;
                    for (size_t j = 0; j < colsn && ok; ++j) vals[j] = 0;
                    for (size_t i = 0; i < free_cols.size(); ++i) vals[free_cols[i]] = freev[i];
                    for (size_t i = 0; i < pivot_col.size(); ++i) {
                        uint32_t v = a[i][colsn];
                        for (size_t fc = 0; fc < free_cols.size(); ++fc)
                            v = f.sub(v, f.mul(a[i][free_cols[fc]], freev[fc]));
                        vals[pivot_col[i]] = v;
                    }
                    for (size_t j = 0; j < colsn; ++j) ok = ok && vals[j] != 0;
                    if (!ok) continue;
                    // new pending state
                    std::vector<uint32_t> np(gamma, 0);
                    for (size_t i = 0; i < rho; ++i) {
                        size_t gd = st.row_deg[i];
                        for (size_t e = 1; e <= gd; ++e) {
                            uint32_t acc = (e < gd) ? pend[st.offset[i] + e] : 0;
                            for (size_t j = 0; j < w; ++j)
                                acc = f.add(acc, f.mul(vals[j], st.rev[i][e][sel[j]]));
                            np[st.offset[i] + e - 1] = acc;
                        }
                    }
                    std::vector<uint32_t> frame(n, 0);
                    for (size_t j = 0; j < w; ++j) frame[sel[j]] = vals[j];
                    relax(s, d0 + w, frame, detail::encode_radix(np, f.q));
                }
                return;
            }
            for (size_t c = from; c + (w - idx) <= n; ++c) {
                sel[idx] = c;
                rec_support(idx + 1, c + 1);
            }
        };
        rec_support(0, 0);
    };

    while (!pq.empty()) {
        auto [prio, s, layer] = pq.top();
        pq.pop();
        if (prio >= best || prio >= ub) break;
        if (layer == 0) {
            if (settled[s]) continue;
            settled[s] = true;
            uint32_t d0 = dist[s];
            // zero-weight edge: emit an all-zero frame if the owed syndromes
            // allow it (shifts the pending contents)
            if (s != 0) {
                auto pend = pending_of(s);
                bool ok = true;
                for (size_t i = 0; i < rho && ok; ++i)
                    if (st.row_deg[i] >= 1 && pend[st.offset[i]] != 0) ok = false;
                if (ok) {
                    std::vector<uint32_t> np(gamma, 0);
                    for (size_t i = 0; i < rho; ++i)
                        for (size_t e = 1; e + 1 <= st.row_deg[i]; ++e)
                            np[st.offset[i] + e - 1] = pend[st.offset[i] + e];
                    relax(s, d0, std::vector<uint32_t>(n, 0), detail::encode_radix(np, f.q));
                }
            }
            if (d0 + 1 < std::min(best, ub)) pq.push({d0 + 1, s, 1});
        } else {
            uint32_t d0 = dist[s];
            if (d0 + layer != prio) continue;  // stale token
            uint32_t limit = std::min(best, ub);
            if (d0 + layer >= limit) continue;
            bool terminal_only = (d0 + layer == limit - 1);
            expand_layer(s, d0, layer, terminal_only);
            limit = std::min(best, ub);
            if (d0 + layer + 1 < limit) pq.push({d0 + layer + 1, s, layer + 1});
        }
    }

    uint32_t value;
    std::vector<Poly> witness;
    if (best == INF) {
        if (ub == INF) throw InternalError("syndrome search found no codeword");
        value = ub;  // nothing lighter than the hint exists
        witness = std::move(ub_witness);
    } else {
        value = best;
        // rebuild the frame sequence
        std::vector<std::vector<uint32_t>> frames{best_final_frame};
        uint64_t cur = best_prev;
        while (cur != 0 && cur != UINT64_MAX) {
            frames.push_back(parent[cur].frame);
            cur = parent[cur].prev;
        }
        std::reverse(frames.begin(), frames.end());
        witness.assign(n, Poly{});
        for (size_t t = 0; t < frames.size(); ++t)
            for (size_t j = 0; j < n; ++j) {
                if (!frames[t][j]) continue;
                if (witness[j].size() < t + 1) witness[j].resize(t + 1, 0);
                witness[j][t] = frames[t][j];
            }
        PolyMat wm(f, 1, n);
        for (size_t j = 0; j < n; ++j) wm.at(0, j) = witness[j];
        if (symbol_weight(witness) != value || !is_orthogonal_pair(wm, check))
            throw InternalError("syndrome witness verification failed");
    }
    return {value, CertKind::ExactTrellis, true, std::move(witness)};
}

}  // namespace mdsconv

#endif
