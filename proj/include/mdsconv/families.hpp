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

#ifndef MDSCONV_FAMILIES_HPP
#define MDSCONV_FAMILIES_HPP

#include <sstream>

#include "cyclic.hpp"
#include "distance.hpp"
#include "quantum.hpp"

namespace mdsconv {

enum class FamilyKind { thm_main, cor_c, thm_mainI, thm_mainII, thm_mainIII, thm_main1 };

inline const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::thm_main: return "thm_main";
        case FamilyKind::cor_c: return "cor_c";
        case FamilyKind::thm_mainI: return "thm_mainI";
        case FamilyKind::thm_mainII: return "thm_mainII";
        case FamilyKind::thm_mainIII: return "thm_mainIII";
        case FamilyKind::thm_main1: return "thm_main1";
    }
    return "?";
}

inline std::optional<FamilyKind> family_from_name(const std::string& s) {
    for (FamilyKind k : {FamilyKind::thm_main, FamilyKind::cor_c, FamilyKind::thm_mainI,
                         FamilyKind::thm_mainII, FamilyKind::thm_mainIII, FamilyKind::thm_main1})
        if (s == family_name(k)) return k;
    return std::nullopt;
}

struct FamilyRequest {
    FamilyKind family = FamilyKind::thm_main;
    uint32_t q = 0;
    uint32_t i = 0;       // index for all families except thm_mainIII
    uint32_t r = 0, m = 0;  // thm_mainIII indices
};

namespace detail {

/// (p, t) with q = p^t, p prime; throws for q < 2 or non-prime-powers.
inline std::pair<uint32_t, uint32_t> prime_power(uint32_t q) {
    if (q < 2) throw IndexOutOfRange("field size must be a prime power >= 2");
    uint32_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q prime
    uint32_t t = 0, v = q;
    while (v % p == 0) {
        v /= p;
        ++t;
    }
    if (v != 1) throw IndexOutOfRange("field size must be a prime power");
    return {p, t};
}

inline bool is_power_of_two(uint32_t q) { return q && !(q & (q - 1)); }

}  // namespace detail

/// Enforces the per-family index constraints; throws IndexOutOfRange with a
/// usage-style message.
inline void validate(const FamilyRequest& req) {
    auto [p, t] = detail::prime_power(req.q);
    switch (req.family) {
        case FamilyKind::thm_main:
        case FamilyKind::cor_c:
            if (p != 2 || t < 3) throw IndexOutOfRange("q must be 2^t, t >= 3");
            if (req.i < 1 || req.i > req.q / 2 - 1)
                throw IndexOutOfRange("need 1 <= i <= q/2 - 1");
            break;
        case FamilyKind::thm_mainI:
            if (p == 2 || t < 2) throw IndexOutOfRange("q must be an odd prime power p^t, t >= 2");
            if (req.i < 2 || req.i > (req.q + 1) / 2 - 1)
                throw IndexOutOfRange("need 2 <= i <= n/2 - 1");
            break;
        case FamilyKind::thm_mainII:
            if (p == 2) throw IndexOutOfRange("q must be an odd prime power");
            if (req.i < 3 || req.i > (req.q + 1) / 2 - 1)
                throw IndexOutOfRange("need 3 <= i <= n/2 - 1");
            break;
        case FamilyKind::thm_mainIII:
            if (p == 2) throw IndexOutOfRange("q must be an odd prime power");
            if (req.r < 1 || req.m < 2 || req.r + req.m < 3 ||
                req.r + req.m > (req.q + 1) / 2 - 1)
                throw IndexOutOfRange("need r >= 1, m >= 2, 3 <= r+m <= n/2 - 1");
            break;
        case FamilyKind::thm_main1:
            if (p != 2 || t < 3) throw IndexOutOfRange("q must be 2^t, t >= 3");
            if (req.i < 2 || req.i > req.q / 2 - 2)
                throw IndexOutOfRange("need 2 <= i <= q/2 - 2");
            break;
    }
}

/// An intermediate cyclic block code with its certified distance.
struct BlockSummary {
    std::string name;          // C, C1, C2, C3
    uint32_t n = 0, k = 0;
    uint32_t d_lower = 0;      // consecutive-root (designed distance) bound
    std::optional<uint32_t> d_exact;
    std::string method;        // how d_exact was certified
    bool mds = false;
    BchSpec spec;
    Mat H;                     // expanded parity-check matrix over the work field
};

struct Verdicts {
    bool mds = false;
    bool self_orthogonal_hermitian = false;
    bool dual_containing = false;       // defining-set criterion (thm_main1)
    uint32_t singleton = 0;             // bound for the headline classical code
    std::optional<uint32_t> quantum_singleton;
};

/// Fully certified artifact of one family instance.
struct CodeRecord {
    FamilyRequest req;
    const Field* work = nullptr;  // field the cyclic codes live over (q or q^2)
    uint32_t n = 0, a = 0;
    std::vector<BlockSummary> blocks;
    ConvCode V;
    std::optional<ConvCode> dual;  // Euclidean dual (thm_main/I) or Hermitian (thm_main1)
    bool dual_is_hermitian = false;
    std::optional<StabilizerCode> quantum;
    Verdicts verdicts;

    /// The code the family's headline parameter claim is about.
    const ConvCode& headline() const { return dual ? *dual : V; }
};

namespace detail {

inline void require_eq(const std::string& what, uint64_t claimed, uint64_t computed) {
    if (claimed != computed) {
        std::ostringstream os;
        os << what << ": claimed " << claimed << ", computed " << computed;
        throw ParityMismatch(os.str());
    }
}

/// Parity rows for the exponents a, a-1, ..., a-L (descending), expanded over
/// the embedding basis with dependent rows dropped; returns the matrix plus
/// the number of rows contributed by each exponent.
struct ExpandedParity {
    Mat H;
    std::vector<size_t> rows_per_exponent;
};

inline ExpandedParity descending_parity(uint32_t a, uint32_t L, uint32_t n, const Embedding& emb,
                                        uint32_t alpha) {
    const Field& base = *emb.base;
    ExpandedParity out{Mat(base, 0, n), {}};
    IncrementalRref tracker(base, n);
    for (uint32_t s = 0; s <= L; ++s) {
        ExpandResult one = bch_parity_matrix({a - s}, n, emb, alpha, false);
        size_t added = 0;
        for (size_t r = 0; r < one.mat.rows; ++r) {
            std::vector<uint32_t> row = one.mat.row(r);
            if (!tracker.insert(row)) continue;
            out.H.append_row(row);
            ++added;
        }
        out.rows_per_exponent.push_back(added);
    }
    return out;
}

/// Certified distance of a BCH block code: the consecutive-root bound is
/// always a valid lower bound; equality with the Singleton bound, a passing
/// column-minor certificate, a minor counterexample matching the lower bound,
/// or exhaustive enumeration can pin it exactly.
inline BlockSummary certify_block(std::string name, const BchSpec& spec, Mat h,
                                  const SearchBudget& budget) {
    BlockSummary b;
    b.name = std::move(name);
    b.n = spec.n;
    b.k = spec.k;
    b.d_lower = spec.delta;
    b.spec = spec;
    b.H = std::move(h);
    uint32_t singleton = spec.n - spec.k + 1;
    if (spec.delta == singleton) {
        b.d_exact = spec.delta;
        b.method = "bch-singleton";
        b.mds = true;
        return b;
    }
    try {
        MdsCertificate cert = mds_minors(b.H, budget);
        if (cert.mds) {
            b.d_exact = singleton;
            b.method = "mds-minors";
            b.mds = true;
            return b;
        }
        if (spec.delta == spec.n - spec.k) {
            // a singular (n-k)-column set gives a weight <= n-k codeword
            b.d_exact = spec.delta;
            b.method = "bch+minor-counterexample";
            return b;
        }
    } catch (const BudgetExceeded&) {
    }
    double total = 1;
    for (uint32_t j = 0; j < spec.k && total <= 1e8; ++j) total *= spec.field->q;
    if (total <= (double)budget.enumeration && total <= 1e8) {
        Mat gen(*spec.field, spec.k, spec.n);
        for (uint32_t r = 0; r < spec.k; ++r)
            for (uint32_t c = 0; c < spec.n; ++c)
                gen.at(r, c) = (c >= r && c - r < spec.g.size()) ? spec.g[c - r] : 0;
        b.d_exact = block_min_distance_exhaustive(gen, budget);
        b.method = "exhaustive";
        b.mds = *b.d_exact == singleton;
        return b;
    }
    b.method = "bch";
    return b;
}

/// Weight-d block codeword of an MDS code with parity matrix h (d = rows+1):
/// the kernel vector supported on the first d columns.
inline std::vector<Poly> mds_block_witness(const Mat& h, uint32_t d) {
    const Field& f = *h.f;
    if (h.rows + 1 != d) throw InternalError("witness wants d = parity rows + 1");
    Mat sub(f, h.rows, d);
    for (size_t r = 0; r < h.rows; ++r)
        for (size_t c = 0; c < d; ++c) sub.at(r, c) = h.at(r, c);
    Mat ker = nullspace(sub);
    if (ker.rows != 1) throw InternalError("restricted parity kernel not 1-dimensional");
    std::vector<Poly> w(h.cols);
    for (size_t c = 0; c < d; ++c) {
        if (ker.at(0, c) == 0) throw InternalError("witness support not full (code not MDS?)");
        w[c] = Poly{ker.at(0, c)};
    }
    return w;
}

inline Mat conj_mat(const Mat& m) {
    Mat r = m;
    for (auto& v : r.a) v = m.f->conj(v);
    return r;
}

}  // namespace detail

/// Executes the requested theorem recipe and certifies every claim; parameter
/// mismatches against the theorem formulas are hard ParityMismatch errors.
inline CodeRecord build(const FamilyRequest& req, const SearchBudget& budget = SearchBudget{}) {
    validate(req);
    CodeRecord rec;
    rec.req = req;
    auto [p, t] = detail::prime_power(req.q);
    bool quantum_family = req.family == FamilyKind::thm_main1;
    const Field& work = quantum_family ? make_field(p, 2 * t) : make_field(p, t);
    const Field& ext = make_field(p, 2 * (quantum_family ? 2 * t : t));
    const Embedding& emb = Embedding::get(work, ext);
    rec.work = &work;
    uint32_t n = work.q + 1;
    uint32_t a = n / 2;  // = q/2 for even q, (q+1)/2 for odd q
    rec.n = n;
    rec.a = a;
    uint32_t alpha = primitive_nth_root(n, ext);
    bool odd_q = (p != 2);

    uint32_t L = (req.family == FamilyKind::thm_mainIII) ? req.r + req.m : req.i;
    detail::ExpandedParity par = detail::descending_parity(a, L, n, emb, alpha);

    // expected expansion pattern: 2 rows per exponent, except a single row for
    // the self-conjugate exponent a when q is odd (alpha^a = -1)
    for (size_t s = 0; s <= L; ++s) {
        size_t expect = (odd_q && s == 0) ? 1 : 2;
        detail::require_eq("parity rows for exponent a-" + std::to_string(s), expect,
                           par.rows_per_exponent[s]);
    }
    size_t h_rows = par.H.rows;

    // split boundaries per the theorem's partition
    std::vector<size_t> boundaries;
    size_t mem_blocks = (req.family == FamilyKind::thm_mainII)   ? 2
                        : (req.family == FamilyKind::thm_mainIII) ? req.m
                                                                  : 1;
    size_t head = h_rows;
    for (size_t b = 0; b < mem_blocks; ++b) head -= par.rows_per_exponent[L - b];
    boundaries.push_back(head);
    for (size_t b = mem_blocks; b-- > 0;) boundaries.push_back(par.rows_per_exponent[L - b]);

    rec.V = split_and_lift({par.H, boundaries});

    // claimed (k, gamma, m) of V per family
    size_t claim_k = 0, claim_gamma = 0, claim_mem = 0;
    switch (req.family) {
        case FamilyKind::thm_main:
        case FamilyKind::cor_c:
        case FamilyKind::thm_main1:
            claim_k = 2 * req.i; claim_gamma = 2; claim_mem = 1; break;
        case FamilyKind::thm_mainI:
            claim_k = 2 * req.i - 1; claim_gamma = 2; claim_mem = 1; break;
        case FamilyKind::thm_mainII:
            claim_k = 2 * req.i - 3; claim_gamma = 4; claim_mem = 2; break;
        case FamilyKind::thm_mainIII:
            claim_k = 2 * req.r + 1; claim_gamma = 2 * req.m; claim_mem = req.m; break;
    }
    detail::require_eq("dim V", claim_k, rec.V.k);
    detail::require_eq("degree of V", claim_gamma, rec.V.gamma);
    detail::require_eq("memory of V", claim_mem, rec.V.memory);

    // intermediate block codes: C1 (head cosets), one single-coset C per
    // memory exponent, and the full code (C2, or C3 for multi-memory families)
    std::vector<uint32_t> all_reps, head_reps;
    for (uint32_t s = 0; s <= L; ++s) all_reps.push_back(a - s);
    for (uint32_t s = 0; s + mem_blocks <= L; ++s) head_reps.push_back(a - s);
    auto parity_for = [&](const std::vector<uint32_t>& reps) {
        std::vector<uint32_t> exps(reps.begin(), reps.end());
        return detail::descending_parity(exps.front(), (uint32_t)(exps.front() - exps.back()), n,
                                         emb, alpha)
            .H;
    };
    {
        BchSpec s1 = bch_code(n, work, head_reps, emb, alpha);
        rec.blocks.push_back(detail::certify_block("C1", s1, parity_for(head_reps), budget));
        for (size_t b = mem_blocks; b-- > 0;) {
            uint32_t e = L - (uint32_t)b;
            BchSpec sc = bch_code(n, work, {a - e}, emb, alpha);
            ExpandResult one = bch_parity_matrix({a - e}, n, emb, alpha);
            rec.blocks.push_back(detail::certify_block("C", sc, one.mat, budget));
        }
        BchSpec sf = bch_code(n, work, all_reps, emb, alpha);
        const char* full_name = mem_blocks > 1 ? "C3" : "C2";
        rec.blocks.push_back(detail::certify_block(full_name, sf, par.H, budget));
    }
    const BlockSummary& blk_head = rec.blocks.front();
    const BlockSummary& blk_full = rec.blocks.back();

    bool dual_family = req.family == FamilyKind::thm_main || req.family == FamilyKind::thm_mainI ||
                       quantum_family;
    if (dual_family) {
        uint32_t claim_df = odd_q ? 2 * req.i + 2 : 2 * req.i + 3;
        ConvCode dual = quantum_family ? hermitian_dual(rec.V) : euclidean_dual(rec.V);
        rec.dual_is_hermitian = quantum_family;
        detail::require_eq("dim of dual", n - claim_k, dual.k);
        detail::require_eq("degree of dual", 2, dual.gamma);
        if (!quantum_family) detail::require_eq("memory of dual", 1, dual.memory);

        // sandwich: min{d(C1) + d(C), d(full)} <= d_f <= d(full)
        if (!blk_full.d_exact) throw ParityMismatch("full block distance not certified");
        uint32_t d0 = blk_head.d_exact ? *blk_head.d_exact : blk_head.d_lower;
        const BlockSummary& blk_mem = rec.blocks[1];
        uint32_t dm = blk_mem.d_exact ? *blk_mem.d_exact : blk_mem.d_lower;
        Sandwich sw = distance_sandwich({d0, dm}, *blk_full.d_exact);
        DistanceCert cert{sw.lower, CertKind::Sandwich, sw.exact(), {}};
        if (!sw.exact()) cert.kind = CertKind::LowerBound;

        // exact syndrome-former confirmation when the budget admits
        const PolyMat check = quantum_family ? conj(rec.V.G) : rec.V.G;
        uint64_t states = 1;
        bool states_ok = true;
        for (size_t g = 0; g < rec.V.gamma; ++g) {
            states *= work.q;
            if (states > budget.states) { states_ok = false; break; }
        }
        if (states_ok &&
            detail::binom(n, sw.upper - 1, budget.enumeration) <= budget.enumeration) {
            try {
                Mat hw = quantum_family ? detail::conj_mat(blk_full.H) : blk_full.H;
                auto witness = detail::mds_block_witness(hw, *blk_full.d_exact);
                DistanceCert exact = free_distance_syndrome_trellis(
                    dual, check, std::make_pair(*blk_full.d_exact, witness), budget);
                if (sw.exact())
                    detail::require_eq("exact d_f vs sandwich", cert.value, exact.value);
                cert = std::move(exact);
            } catch (const BudgetExceeded&) {
                // keep the sandwich certificate
            }
        }
        detail::require_eq("d_f of dual", claim_df, cert.value);
        dual.df = std::move(cert);
        rec.verdicts.singleton = singleton_bound(dual.n, dual.k, dual.gamma);
        rec.verdicts.mds = dual.df->exact && is_mds(dual);
        if (!rec.verdicts.mds)
            detail::require_eq("MDS Singleton equality", rec.verdicts.singleton, cert.value);
        rec.dual = std::move(dual);
    } else {
        // cor_c / thm_mainII / thm_mainIII: the claim is a lower bound on V
        uint32_t claim_lb = req.family == FamilyKind::cor_c ? n - 2 * req.i - 1
                            : req.family == FamilyKind::thm_mainII ? n - 2 * req.i
                                                                   : n - 2 * (req.r + req.m);
        DistanceCert cert{claim_lb, CertKind::LowerBound, false, {}};
        uint64_t states = 1, branches = 1;
        bool fits = true;
        for (size_t g = 0; g < rec.V.gamma && fits; ++g)
            fits = (states *= work.q) <= budget.states;
        for (size_t g = 0; g < rec.V.k && fits; ++g)
            fits = (branches *= work.q) <= budget.states;
        if (fits) {
            try {
                DistanceCert exact = free_distance_generator_trellis(rec.V, budget);
                if (exact.value < claim_lb)
                    detail::require_eq("d_f lower bound", claim_lb, exact.value);
                cert = std::move(exact);
            } catch (const BudgetExceeded&) {
            }
        }
        rec.V.df = std::move(cert);
        rec.verdicts.singleton = singleton_bound(rec.V.n, rec.V.k, rec.V.gamma);
    }

    if (quantum_family) {
        rec.verdicts.self_orthogonal_hermitian = is_self_orthogonal(rec.V, InnerForm::Hermitian);
        if (!rec.verdicts.self_orthogonal_hermitian)
            throw NotHermitianSelfOrthogonal("V is not Hermitian self-orthogonal");
        rec.verdicts.dual_containing = hermitian_dual_containing(blk_full.spec.Z, n, work);
        if (!rec.verdicts.dual_containing)
            throw ParityMismatch("defining-set dual-containing criterion failed");
        const Field& base = make_field(p, t);
        const Embedding& base_emb = Embedding::get(base, work);
        StabilizerCode s = stabilizer_from_hermitian(rec.V, base_emb, rec.dual->df);
        detail::require_eq("quantum n", n, s.n);
        detail::require_eq("quantum k", n - 4 * req.i, s.k);
        detail::require_eq("quantum memory", 1, s.memory);
        detail::require_eq("quantum degree", 2, s.gamma);
        rec.verdicts.quantum_singleton = quantum_singleton_bound(s.n, s.k, s.gamma);
        detail::require_eq("quantum Singleton equality", *rec.verdicts.quantum_singleton,
                           s.df->value);
        rec.verdicts.mds = s.df->exact && is_quantum_mds(s);
        rec.quantum = std::move(s);
    }
    return rec;
}

/// One entry of an enumeration sweep; failures are captured per record.
struct EnumEntry {
    FamilyRequest req;
    std::optional<CodeRecord> record;
    std::string status = "ok";
};

/// All valid indices of a family for each q, in (q asc, index asc) order.
inline std::vector<EnumEntry> enumerate(FamilyKind family, const std::vector<uint32_t>& q_list,
                                        const SearchBudget& budget = SearchBudget{}) {
    std::vector<uint32_t> qs = q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    std::vector<EnumEntry> out;
    auto run = [&](const FamilyRequest& req) {
        EnumEntry e;
        e.req = req;
        try {
            e.record = build(req, budget);
        } catch (const Error& err) {
            e.status = err.what();
        }
        out.push_back(std::move(e));
    };
    for (uint32_t q : qs) {
        uint32_t n = q + 1, a = n / 2;
        switch (family) {
            case FamilyKind::thm_main:
            case FamilyKind::cor_c:
                for (uint32_t i = 1; i + 1 <= q / 2; ++i) run({family, q, i});
                break;
            case FamilyKind::thm_mainI:
                for (uint32_t i = 2; i + 1 <= a; ++i) run({family, q, i});
                break;
            case FamilyKind::thm_mainII:
                for (uint32_t i = 3; i + 1 <= a; ++i) run({family, q, i});
                break;
            case FamilyKind::thm_mainIII:
                for (uint32_t r = 1; r + 2 <= a - 1; ++r)
                    for (uint32_t m = 2; r + m <= a - 1; ++m)
                        run({family, q, 0, r, m});
                break;
            case FamilyKind::thm_main1:
                for (uint32_t i = 2; i + 2 <= q / 2; ++i) run({family, q, i});
                break;
        }
    }
    return out;
}

}  // namespace mdsconv

#endif
