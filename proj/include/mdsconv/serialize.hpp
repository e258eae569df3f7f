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

#ifndef MDSCONV_SERIALIZE_HPP
#define MDSCONV_SERIALIZE_HPP

#include <json.hpp>

#include "families.hpp"

namespace mdsconv {

using json = nlohmann::ordered_json;

// ---- matrix text format: one row per line, comma-separated entries,
// ---- polynomial entry = `[c0 c1 ... cm]`, constants may omit brackets.

inline std::string poly_entry_text(const Poly& p) {
    if (p.size() <= 1) return std::to_string(p.empty() ? 0 : p[0]);
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

inline std::string matrix_text(const PolyMat& m) {
    std::string out;
    for (size_t r = 0; r < m.rows; ++r) {
        for (size_t c = 0; c < m.cols; ++c) {
            if (c) out += ',';
            out += poly_entry_text(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

inline std::string matrix_text(const Mat& m) {
    std::string out;
    for (size_t r = 0; r < m.rows; ++r) {
        for (size_t c = 0; c < m.cols; ++c) {
            if (c) out += ',';
            out += std::to_string(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

inline std::string matrix_text(const std::vector<Poly>& row, size_t cols) {
    std::string out;
    for (size_t c = 0; c < cols; ++c) {
        if (c) out += ',';
        out += poly_entry_text(c < row.size() ? row[c] : Poly{});
    }
    out += '\n';
    return out;
}

inline PolyMat parse_poly_matrix(const std::string& text, const Field& f) {
    std::vector<std::vector<Poly>> rows;
    size_t cols = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Poly> row;
        size_t pos = 0;
        while (pos < line.size()) {
            Poly p;
            if (line[pos] == '[') {
                size_t end = line.find(']', pos);
                if (end == std::string::npos) throw InternalError("unterminated bracket entry");
                std::istringstream es(line.substr(pos + 1, end - pos - 1));
                uint32_t v;
                while (es >> v) p.push_back(v);
                pos = end + 1;
                if (pos < line.size() && line[pos] == ',') ++pos;
            } else {
                size_t end = line.find(',', pos);
                std::string tok = line.substr(pos, end == std::string::npos ? end : end - pos);
                p.push_back((uint32_t)std::stoul(tok));
                pos = end == std::string::npos ? line.size() : end + 1;
            }
            for (uint32_t c : p)
                if (c >= f.q) throw InternalError("matrix entry outside the field");
            polyops::trim(p);
            row.push_back(std::move(p));
        }
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw InternalError("ragged matrix text");
        rows.push_back(std::move(row));
    }
    PolyMat m(f, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = std::move(rows[r][c]);
    return m;
}

inline Mat parse_matrix(const std::string& text, const Field& f) {
    PolyMat pm = parse_poly_matrix(text, f);
    Mat m(f, pm.rows, pm.cols);
    for (size_t r = 0; r < pm.rows; ++r)
        for (size_t c = 0; c < pm.cols; ++c) {
            if (polyops::deg(pm.at(r, c)) > 0) throw InternalError("polynomial in scalar matrix");
            m.at(r, c) = polyops::coeff(pm.at(r, c), 0);
        }
    return m;
}

// ---- JSON ----

inline json field_json(const Field& f) {
    return json{{"p", f.p}, {"t", f.t}, {"modulus", f.modulus}};
}

inline const char* cert_label(const DistanceCert& c) {
    return c.exact ? "exact" : cert_kind_name(c.kind);
}

inline json cert_json(const DistanceCert& c, size_t cols) {
    json j{{"value", c.value}, {"certificate", cert_label(c)}, {"method", cert_kind_name(c.kind)}};
    if (!c.witness.empty()) j["witness"] = matrix_text(c.witness, cols);
    return j;
}

inline json conv_json(const ConvCode& c) {
    json j{{"n", c.n}, {"k", c.k},      {"gamma", c.gamma},
           {"memory", c.memory}, {"q", c.f->q}, {"G", matrix_text(c.G)}};
    if (c.df) j["d_f"] = cert_json(*c.df, c.n);
    return j;
}

inline json bch_json(const BchSpec& s) {
    return json{{"n", s.n}, {"q", s.field->q}, {"b", s.b},
                {"delta", s.delta}, {"Z", s.Z}, {"k", s.k}};
}

inline json block_json(const BlockSummary& b) {
    json j = bch_json(b.spec);
    j["name"] = b.name;
    j["d_lower"] = b.d_lower;
    if (b.d_exact) j["d_exact"] = *b.d_exact;
    j["method"] = b.method;
    j["mds"] = b.mds;
    j["H"] = matrix_text(b.H);
    return j;
}

inline json stabilizer_json(const StabilizerCode& s) {
    json j{{"n", s.n}, {"k", s.k}, {"m", s.memory}, {"gamma", s.gamma}, {"q", s.f->q}};
    if (s.df) {
        j["d_f"] = s.df->value;
        j["certificate"] = cert_label(*s.df);
    }
    j["X"] = matrix_text(s.X);
    j["Z"] = matrix_text(s.Z);
    return j;
}

inline json record_json(const CodeRecord& rec) {
    json j;
    j["family"] = family_name(rec.req.family);
    j["q"] = rec.req.q;
    if (rec.req.family == FamilyKind::thm_mainIII) {
        j["r"] = rec.req.r;
        j["m"] = rec.req.m;
    } else {
        j["i"] = rec.req.i;
    }
    j["n"] = rec.n;
    j["a"] = rec.a;
    j["field"] = field_json(*rec.work);
    j["blocks"] = json::array();
    for (const auto& b : rec.blocks) j["blocks"].push_back(block_json(b));
    j["V"] = conv_json(rec.V);
    if (rec.dual) {
        j["dual"] = conv_json(*rec.dual);
        j["dual"]["hermitian"] = rec.dual_is_hermitian;
    }
    if (rec.quantum) j["quantum"] = stabilizer_json(*rec.quantum);
    json v{{"mds", rec.verdicts.mds},
           {"self_orthogonal_hermitian", rec.verdicts.self_orthogonal_hermitian},
           {"dual_containing", rec.verdicts.dual_containing},
           {"singleton", rec.verdicts.singleton}};
    if (rec.verdicts.quantum_singleton) v["quantum_singleton"] = *rec.verdicts.quantum_singleton;
    j["verdicts"] = v;
    return j;
}

/// CSV projection (family, q, n, k, gamma, memory, d_f, certificate, mds) of
/// the headline code.
inline std::string csv_header() {
    return "family,q,n,k,gamma,memory,d_f,certificate,mds";
}

inline std::string csv_row(const CodeRecord& rec) {
    const ConvCode& h = rec.headline();
    std::ostringstream os;
    os << family_name(rec.req.family) << ',' << rec.req.q << ',' << h.n << ',' << h.k << ','
       << h.gamma << ',' << h.memory << ',' << (h.df ? (int64_t)h.df->value : -1) << ','
       << (h.df ? cert_label(*h.df) : "none") << ',' << (rec.verdicts.mds ? "true" : "false");
    return os.str();
}

// ---- verification of a serialized record, from the serialized data alone ----

namespace detail {

inline void check(bool ok, const std::string& what) {
    if (!ok) throw ParityMismatch(what);
}

}  // namespace detail

/// Re-runs every certificate embedded in an exported record: canonical field,
/// reduced/basic generators, duality and symplectic identities, distance
/// witnesses, BCH bookkeeping, and bound equalities. Throws naming the first
/// failing check.
inline void verify_record(const json& j) {
    using detail::check;
    uint32_t p = j.at("field").at("p"), t = j.at("field").at("t");
    const Field& work = make_field(p, t);
    check(j.at("field").at("modulus").get<std::vector<uint32_t>>() == work.modulus,
          "field modulus is not the canonical one");
    uint32_t n = j.at("n");
    check(n == work.q + 1, "n != q + 1");

    // blocks: defining-set bookkeeping and parity matrices
    for (const auto& bj : j.at("blocks")) {
        uint32_t bn = bj.at("n"), bk = bj.at("k"), delta = bj.at("delta"), b0 = bj.at("b");
        auto z = bj.at("Z").get<std::vector<uint32_t>>();
        check(bn == n, "block length mismatch");
        check(bk + z.size() == bn, "block dimension vs defining set size");
        auto run = longest_consecutive_run(z, bn);
        check(run.first == b0 && run.second + 1 == delta,
              "designed distance bookkeeping mismatch");
        Mat h = parse_matrix(bj.at("H").get<std::string>(), work);
        check(h.rows == z.size() && h.cols == bn, "block parity matrix shape");
        check(rank(h) == h.rows, "block parity matrix rank");
        if (bj.contains("d_exact")) {
            uint32_t de = bj.at("d_exact");
            check(de >= delta, "exact block distance below the designed distance");
            check(de <= bn - bk + 1, "exact block distance above the Singleton bound");
            if (bj.at("mds").get<bool>())
                check(de == bn - bk + 1, "MDS block distance not at the Singleton bound");
        }
    }

    auto parse_conv = [&](const json& cj) {
        ConvCode c = make_conv_code(parse_poly_matrix(cj.at("G").get<std::string>(), work));
        check(c.n == cj.at("n").get<size_t>() && c.k == cj.at("k").get<size_t>(),
              "generator matrix shape vs stated parameters");
        check(c.gamma == cj.at("gamma").get<size_t>(), "stated degree vs generator");
        check(c.memory == cj.at("memory").get<size_t>(), "stated memory vs generator");
        check(is_row_reduced(c.G), "generator not row reduced");
        try {
            check(minor_gcd_is_unit(c.G), "generator not basic");
        } catch (const BudgetExceeded&) {
        }
        return c;
    };
    ConvCode v = parse_conv(j.at("V"));

    auto check_cert = [&](const json& cj, const ConvCode& code, const PolyMat* dual_check) {
        if (!cj.contains("d_f")) return;
        const json& dj = cj.at("d_f");
        uint32_t value = dj.at("value");
        std::string label = dj.at("certificate");
        if (dj.contains("witness")) {
            PolyMat w = parse_poly_matrix(dj.at("witness").get<std::string>(), work);
            check(w.rows == 1 && w.cols == code.n, "witness shape");
            std::vector<Poly> wv(w.e.begin(), w.e.end());
            check(symbol_weight(wv) == value, "witness weight mismatch");
            if (dual_check) {
                check(is_orthogonal_pair(w, *dual_check),
                      "witness not orthogonal to the dual generator");
            } else {
                // membership: stacking the witness must not raise the rank
                PolyMat stacked(work, code.k + 1, code.n);
                for (size_t r = 0; r < code.k; ++r)
                    for (size_t c = 0; c < code.n; ++c) stacked.at(r, c) = code.G.at(r, c);
                for (size_t c = 0; c < code.n; ++c) stacked.at(code.k, c) = w.at(0, c);
                check(poly_rank(stacked) == code.k, "witness outside the code");
            }
        } else {
            check(label != "exact" || value > 0, "exact certificate without witness or value");
        }
    };
    check_cert(j.at("V"), v, nullptr);

    bool mds_claim = j.at("verdicts").at("mds").get<bool>();
    if (j.contains("dual")) {
        ConvCode d = parse_conv(j.at("dual"));
        bool herm = j.at("dual").at("hermitian").get<bool>();
        const PolyMat vg = herm ? conj(v.G) : v.G;
        check(is_orthogonal_pair(d.G, vg), "orthogonality identity failed");
        check(v.k + d.k == n, "dual dimension mismatch");
        check_cert(j.at("dual"), d, &vg);
        if (mds_claim && !j.contains("quantum")) {
            uint32_t value = j.at("dual").at("d_f").at("value");
            check(j.at("dual").at("d_f").at("certificate") == "exact",
                  "MDS claim without an exact certificate");
            check(value == singleton_bound(d.n, d.k, d.gamma),
                  "MDS claim vs Singleton bound");
            check(value == j.at("verdicts").at("singleton").get<uint32_t>(),
                  "stated Singleton bound mismatch");
        }
    } else {
        check(j.at("verdicts").at("singleton").get<uint32_t>() ==
                  singleton_bound(v.n, v.k, v.gamma),
              "stated Singleton bound mismatch");
    }

    if (j.contains("quantum")) {
        const json& qj = j.at("quantum");
        uint32_t bq = qj.at("q");
        auto [bp, bt] = detail::prime_power(bq);
        const Field& base = make_field(bp, bt);
        PolyMat x = parse_poly_matrix(qj.at("X").get<std::string>(), base);
        PolyMat z = parse_poly_matrix(qj.at("Z").get<std::string>(), base);
        check(x.rows == z.rows && x.cols == n && z.cols == n, "stabilizer block shape");
        check(symplectic_identity_holds(x, z), "symplectic identity failed");
        check(qj.at("k").get<size_t>() + x.rows == n, "quantum dimension mismatch");
        check(x.rows == 2 * v.k, "stabilizer rows vs dim V");
        {
            PolyMat full(base, x.rows, 2 * n);
            for (size_t r = 0; r < x.rows; ++r)
                for (size_t c = 0; c < n; ++c) {
                    full.at(r, c) = x.at(r, c);
                    full.at(r, n + c) = z.at(r, c);
                }
            check(poly_rank(full) == x.rows, "stabilizer matrix rank deficient");
        }
        uint32_t df = qj.at("d_f");
        uint32_t qs = quantum_singleton_bound(qj.at("n").get<size_t>(), qj.at("k").get<size_t>(),
                                              qj.at("gamma").get<size_t>());
        check(df <= qs, "quantum distance above the quantum Singleton bound");
        if (mds_claim) check(df == qs, "quantum MDS claim vs quantum Singleton bound");
        check(df == j.at("dual").at("d_f").at("value").get<uint32_t>(),
              "quantum distance vs classical dual distance");
    }
}

}  // namespace mdsconv

#endif
