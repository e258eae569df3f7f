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

#include <catch_amalgamated.hpp>
#include <mdsconv/cyclic.hpp>
#include <mdsconv/quantum.hpp>

using namespace mdsconv;

namespace {

std::vector<uint32_t> coset_union(uint32_t n, uint32_t q2, std::initializer_list<uint32_t> reps) {
    std::set<uint32_t> z;
    for (uint32_t r : reps) {
        auto c = coset(n, q2, r);
        z.insert(c.elements.begin(), c.elements.end());
    }
    return {z.begin(), z.end()};
}

}  // namespace

TEST_CASE("defining-set criterion for Hermitian dual containment, n = 65, q = 8") {
    const Field& ext = make_field(2, 6);  // GF(64) = GF(8^2)
    REQUIRE(ext.quadratic_subfield_size() == 8);
    CHECK(hermitian_dual_containing({}, 65, ext));
    // the defining set of the main even-q construction at i = 2
    auto z = coset_union(65, 64, {30, 31, 32});
    CHECK(z.size() == 6);
    CHECK(hermitian_dual_containing(z, 65, ext));
    // a set hitting its own -q multiple: C_1 union C_8 (since -8*1 = 57 in C_8)
    auto bad = coset_union(65, 64, {1, 8});
    CHECK_FALSE(hermitian_dual_containing(bad, 65, ext));
    CHECK_FALSE(hermitian_dual_containing({0}, 65, ext));
    // a set that is not a union of cosets
    CHECK_THROWS_AS(hermitian_dual_containing({30}, 65, ext), NotCosetClosed);
    CHECK_THROWS_AS(hermitian_dual_containing({1}, 65, make_field(2, 3)), FieldNotQuadratic);
}

TEST_CASE("defining-set criterion matches the parity-matrix oracle") {
    // C^perp_h subset of C holds iff H * conj(H)^T = 0 for the expanded
    // parity matrix H of the defining set
    const Field& ext = make_field(2, 6);    // GF(64), the code alphabet
    const Field& big = make_field(2, 12);   // GF(64^2), home of the order-65 root
    const Embedding& emb = Embedding::get(ext, big);
    uint32_t alpha = primitive_nth_root(65, big);
    auto oracle = [&](const std::vector<uint32_t>& z) {
        ExpandResult h = bch_parity_matrix(z, 65, emb, alpha, false);
        Mat hc = h.mat;
        for (auto& v : hc.a) v = ext.conj(v);
        for (size_t i = 0; i < h.mat.rows; ++i)
            for (size_t j = 0; j < hc.rows; ++j) {
                uint32_t acc = 0;
                for (size_t c = 0; c < 65; ++c)
                    acc = ext.add(acc, ext.mul(h.mat.at(i, c), hc.at(j, c)));
                if (acc != 0) return false;
            }
        return true;
    };
    auto good = coset_union(65, 64, {30, 31, 32});
    CHECK(hermitian_dual_containing(good, 65, ext) == oracle(good));
    CHECK(oracle(good));
    auto bad = coset_union(65, 64, {1, 8});
    CHECK(hermitian_dual_containing(bad, 65, ext) == oracle(bad));
    CHECK_FALSE(oracle(bad));
    auto bad2 = coset_union(65, 64, {0, 30});
    CHECK(hermitian_dual_containing(bad2, 65, ext) == oracle(bad2));
}

TEST_CASE("symplectic identity in the delay domain") {
    const Field& f = make_field(2, 1);
    PolyMat x(f, 1, 2), z(f, 1, 2);
    x.at(0, 0) = Poly{1};
    z.at(0, 1) = Poly{1};
    CHECK(symplectic_identity_holds(x, z));  // disjoint supports commute
    PolyMat x2(f, 1, 1), z2(f, 1, 1);
    x2.at(0, 0) = Poly{1};
    z2.at(0, 0) = Poly{0, 1};  // x z(1/D) - z x(1/D) = 1/D - D != 0
    CHECK_FALSE(symplectic_identity_holds(x2, z2));
}

TEST_CASE("stabilizer lift of a Hermitian self-orthogonal code over GF(4)") {
    const Field& b = make_field(2, 1);
    const Field& e = make_field(2, 2);
    const Embedding& emb = Embedding::get(b, e);
    // g = (1, D): g . conj(g) reversed = 1*D + D*1 = 0 in characteristic 2
    PolyMat g(e, 1, 2);
    g.at(0, 0) = Poly{1};
    g.at(0, 1) = Poly{0, 1};
    ConvCode v = make_conv_code(g);
    REQUIRE(is_self_orthogonal(v, InnerForm::Hermitian));
    DistanceCert dd{2, CertKind::ExactTrellis, true, {}};
    StabilizerCode s = stabilizer_from_hermitian(v, emb, dd);
    CHECK(s.f == &b);
    CHECK(s.n == 2);
    CHECK(s.k == 0);
    CHECK(s.gamma == 1);
    CHECK(s.memory == 1);
    CHECK(s.X.rows == 2);
    CHECK(symplectic_identity_holds(s.X, s.Z));
    REQUIRE(s.df);
    CHECK(s.df->value == 2);
    CHECK(s.df->kind == CertKind::PureAssumed);  // pure-code convention
    CHECK(s.df->exact);
    // omega-row expansions: row 0 from g, row 1 from omega*g
    CHECK(s.X.at(0, 0) == Poly{1});
    CHECK(s.Z.at(1, 0) == Poly{1});
}

TEST_CASE("stabilizer lift rejects non-self-orthogonal input") {
    const Field& b = make_field(2, 1);
    const Field& e = make_field(2, 2);
    const Embedding& emb = Embedding::get(b, e);
    PolyMat g(e, 1, 3);
    g.at(0, 0) = g.at(0, 1) = g.at(0, 2) = Poly{1};  // odd weight: <v,v>_h = 1
    CHECK_THROWS_AS(stabilizer_from_hermitian(make_conv_code(g), emb),
                    NotHermitianSelfOrthogonal);
    // field mismatch: code not over the extension of the embedding
    PolyMat g2(make_field(2, 4), 1, 2);
    g2.at(0, 0) = Poly{1};
    CHECK_THROWS_AS(stabilizer_from_hermitian(make_conv_code(g2), emb), FieldMismatch);
}

TEST_CASE("the zero code lifts to the trivial stabilizer with k = n") {
    const Field& b = make_field(2, 1);
    const Field& e = make_field(2, 2);
    const Embedding& emb = Embedding::get(b, e);
    ConvCode v = make_conv_code(PolyMat(e, 0, 4));
    StabilizerCode s = stabilizer_from_hermitian(v, emb);
    CHECK(s.n == 4);
    CHECK(s.k == 4);
    CHECK(s.X.rows == 0);
    CHECK_FALSE(s.df);
}

TEST_CASE("quantum Singleton bound values") {
    CHECK(quantum_singleton_bound(65, 57, 2) == 7);
    CHECK(quantum_singleton_bound(257, 249, 2) == 7);
    CHECK(quantum_singleton_bound(65, 53, 2) == 9);
    CHECK(quantum_singleton_bound(5, 1, 0) == 3);  // block-code specialization
    CHECK_THROWS_AS(quantum_singleton_bound(6, 3, 1), ParityViolation);
    CHECK_THROWS_AS(quantum_singleton_bound(3, 5, 1), IndexOutOfRange);
}

TEST_CASE("quantum MDS verdict requires an exact certificate") {
    StabilizerCode s;
    s.n = 65;
    s.k = 57;
    s.gamma = 2;
    CHECK_THROWS_AS(is_quantum_mds(s), UncertifiedDistance);
    s.df = DistanceCert{7, CertKind::PureAssumed, true, {}};
    CHECK(is_quantum_mds(s));
    s.df->value = 6;
    CHECK_FALSE(is_quantum_mds(s));
    s.df->exact = false;
    CHECK_THROWS_AS(is_quantum_mds(s), UncertifiedDistance);
}
