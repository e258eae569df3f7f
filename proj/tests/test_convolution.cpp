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
#include <mdsconv/convolution.hpp>
#include <mdsconv/cyclic.hpp>

using namespace mdsconv;

TEST_CASE("split_and_lift agrees with a manual coefficient lift") {
    const Field& b = make_field(2, 3);
    const Field& e = make_field(2, 6);
    const Embedding& emb = Embedding::get(b, e);
    uint32_t alpha = primitive_nth_root(9, e);
    // parity rows for exponents 4, 3 over GF(8), n = 9: 4 expanded rows
    ExpandResult res = bch_parity_matrix({4, 3}, 9, emb, alpha);
    REQUIRE(res.mat.rows == 4);
    SplitPlan plan{res.mat, {2, 2}};
    ConvCode c = split_and_lift(plan);
    CHECK(c.n == 9);
    CHECK(c.k == 2);
    CHECK(c.memory == 1);
    for (size_t r = 0; r < 2; ++r)
        for (size_t col = 0; col < 9; ++col) {
            CHECK(c.G.coefficient(0).at(r, col) == res.mat.at(r, col));
            CHECK(c.G.coefficient(1).at(r, col) == res.mat.at(2 + r, col));
        }
}

TEST_CASE("split_and_lift rejects bad rank hypotheses") {
    const Field& f = make_field(2, 1);
    Mat h(f, 3, 4);
    // H_0 rank deficient: two equal rows
    h.at(0, 0) = 1;
    h.at(1, 0) = 1;
    h.at(2, 1) = 1;
    CHECK_THROWS_AS(split_and_lift(SplitPlan{h, {2, 1}}), RankConditionViolated);
    // boundaries that do not partition the rows
    CHECK_THROWS_AS(split_and_lift(SplitPlan{h, {2, 2}}), RankConditionViolated);
    // rank H_1 > kappa
    Mat h2(f, 3, 4);
    h2.at(0, 0) = 1;
    h2.at(1, 1) = 1;
    h2.at(2, 2) = 1;
    CHECK_THROWS_AS(split_and_lift(SplitPlan{h2, {1, 2}}), RankConditionViolated);
}

TEST_CASE("euclidean dual has complementary dimension and is orthogonal") {
    const Field& f = make_field(2, 2);
    PolyMat g(f, 1, 3);
    g.at(0, 0) = Poly{1, 1};
    g.at(0, 1) = Poly{1};
    g.at(0, 2) = Poly{0, 1};
    ConvCode c = make_conv_code(g);
    ConvCode d = euclidean_dual(c);
    CHECK(d.k == 2);
    CHECK(d.n == 3);
    CHECK(is_orthogonal_pair(c.G, d.G));
    CHECK(is_row_reduced(d.G));
    CHECK(minor_gcd_is_unit(d.G));
    // double dual returns a code orthogonal to the dual, of the original rank
    ConvCode dd = euclidean_dual(d);
    CHECK(dd.k == 1);
    CHECK(is_orthogonal_pair(dd.G, d.G));
}

TEST_CASE("hermitian dual of a base-field code equals its euclidean dual") {
    const Field& e = make_field(2, 4);  // GF(16) over GF(4)
    const Field& b = make_field(2, 2);
    const Embedding& emb = Embedding::get(b, e);
    PolyMat g(e, 1, 3);
    // all coefficients inside the embedded GF(4), so conj(G) == G
    g.at(0, 0) = Poly{emb.embed(1), emb.embed(b.generator)};
    g.at(0, 1) = Poly{emb.embed(b.generator)};
    g.at(0, 2) = Poly{0, emb.embed(1)};
    CHECK(conj(g) == g);
    ConvCode c = make_conv_code(g);
    ConvCode hd = hermitian_dual(c);
    ConvCode ed = euclidean_dual(c);
    CHECK(hd.G == ed.G);
    CHECK_THROWS_AS(hermitian_dual(make_conv_code(PolyMat(make_field(2, 3), 1, 2))),
                    FieldNotQuadratic);
}

TEST_CASE("self-orthogonality under both inner forms") {
    const Field& f = make_field(2, 1);
    PolyMat g(f, 1, 2);
    g.at(0, 0) = Poly{1, 1};
    g.at(0, 1) = Poly{1, 1};
    ConvCode c = make_conv_code(g);
    // over GF(2) the form is <v,v> = sum of products; (a,a) pairs to 2a^2 = 0
    CHECK(is_self_orthogonal(c, InnerForm::Euclidean));
    CHECK_THROWS_AS(is_self_orthogonal(c, InnerForm::Hermitian), FieldNotQuadratic);
    PolyMat g2(f, 1, 2);
    g2.at(0, 0) = Poly{1};
    g2.at(0, 1) = Poly{1, 1};  // <v,v> pairs to 1 + (1+D)(1+1/D) != 0
    CHECK_FALSE(is_self_orthogonal(make_conv_code(g2), InnerForm::Euclidean));
}

TEST_CASE("generalized Singleton bound values") {
    CHECK(singleton_bound(17, 13, 2) == 7);
    CHECK(singleton_bound(9, 7, 2) == 5);
    CHECK(singleton_bound(2, 1, 1) == 4);    // (n-k)(gamma/k+1)+gamma+1 = 1*2+2
    CHECK(singleton_bound(10, 5, 4) == 10);  // 5*1 + 5
    CHECK_THROWS_AS(singleton_bound(5, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(singleton_bound(5, 6, 1), IndexOutOfRange);
}

TEST_CASE("distance sandwich combines block distances with the full distance") {
    Sandwich s = distance_sandwich({3, 2, 4}, 7);
    CHECK(s.lower == 7);
    CHECK(s.upper == 7);
    CHECK(s.exact());
    Sandwich t = distance_sandwich({3, 4}, 9);
    CHECK(t.lower == 7);
    CHECK(t.upper == 9);
    CHECK_FALSE(t.exact());
    CHECK_THROWS_AS(distance_sandwich({3}, 5), IndexOutOfRange);
}

TEST_CASE("MDS verdict requires an exact distance certificate") {
    const Field& f = make_field(2, 1);
    PolyMat g(f, 1, 2);
    g.at(0, 0) = Poly{1, 1};
    g.at(0, 1) = Poly{1, 1};
    ConvCode c = make_conv_code(g);
    CHECK_THROWS_AS(is_mds(c), UncertifiedDistance);
    c.df = DistanceCert{4, CertKind::ExactTrellis, true, {}};
    CHECK(is_mds(c));  // (2,1,1) bound is 4
    c.df->value = 3;
    CHECK_FALSE(is_mds(c));
    c.df->exact = false;
    CHECK_THROWS_AS(is_mds(c), UncertifiedDistance);
}

TEST_CASE("certificate kind names") {
    CHECK(std::string(cert_kind_name(CertKind::ExactTrellis)) == "exact-trellis");
    CHECK(std::string(cert_kind_name(CertKind::Sandwich)) == "sandwich");
    CHECK(std::string(cert_kind_name(CertKind::LowerBound)) == "lower-bound");
    CHECK(std::string(cert_kind_name(CertKind::PureAssumed)) == "pure-assumed");
}
