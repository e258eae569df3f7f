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
#include <mdsconv/distance.hpp>
#include <random>

using namespace mdsconv;

TEST_CASE("symbol weight counts nonzero coefficients across components") {
    // (1 + D^2, D, 0) has three nonzero coefficients in total
    std::vector<Poly> v{Poly{1, 0, 1}, Poly{0, 1}, Poly{}};
    CHECK(symbol_weight(v) == 3);
    CHECK(symbol_weight({}) == 0);
    CHECK(symbol_weight({Poly{}, Poly{}}) == 0);
}

TEST_CASE("exhaustive block distance on known codes") {
    const Field& f2 = make_field(2, 1);
    Mat rep(f2, 1, 3);
    rep.at(0, 0) = rep.at(0, 1) = rep.at(0, 2) = 1;
    CHECK(block_min_distance_exhaustive(rep) == 3);
    // [4,2] over GF(3) with generator rows (1,0,1,1), (0,1,1,2): d = 3
    const Field& f3 = make_field(3, 1);
    Mat g(f3, 2, 4);
    g.at(0, 0) = 1; g.at(0, 2) = 1; g.at(0, 3) = 1;
    g.at(1, 1) = 1; g.at(1, 2) = 1; g.at(1, 3) = 2;
    CHECK(block_min_distance_exhaustive(g) == 3);
    SearchBudget tiny;
    tiny.enumeration = 4;
    CHECK_THROWS_AS(block_min_distance_exhaustive(g, tiny), BudgetExceeded);
}

TEST_CASE("mds_minors certifies Singleton equality or yields a counterexample") {
    const Field& f = make_field(2, 3);
    // 2 x 5 Vandermonde rows alpha^{0j}, alpha^{1j}: every 2x2 minor nonzero
    Mat h(f, 2, 5);
    uint32_t g = f.generator;
    for (uint32_t j = 0; j < 5; ++j) {
        h.at(0, j) = 1;
        h.at(1, j) = f.pow(g, j);
    }
    MdsCertificate c = mds_minors(h);
    CHECK(c.mds);
    CHECK(c.counterexample_cols.empty());
    // duplicate a column: the minor on that pair is singular
    Mat h2 = h;
    h2.at(0, 4) = h2.at(0, 3);
    h2.at(1, 4) = h2.at(1, 3);
    MdsCertificate c2 = mds_minors(h2);
    CHECK_FALSE(c2.mds);
    REQUIRE(c2.counterexample_cols.size() == 2);
    // the reported columns really form a singular submatrix
    Mat sub(f, 2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) sub.at(i, j) = h2.at(i, c2.counterexample_cols[j]);
    CHECK(det(sub) == 0);

    Mat rd(f, 2, 4);
    rd.at(0, 0) = rd.at(1, 0) = 1;
    CHECK_THROWS_AS(mds_minors(rd), RankDeficient);
    SearchBudget tiny;
    tiny.enumeration = 1;
    CHECK_THROWS_AS(mds_minors(h, tiny), BudgetExceeded);
}

TEST_CASE("generator trellis: the basic (2,1,1) code [1, 1+D] has d_f = 3") {
    const Field& f = make_field(2, 1);
    PolyMat g(f, 1, 2);
    g.at(0, 0) = Poly{1};
    g.at(0, 1) = Poly{1, 1};
    ConvCode c = make_conv_code(g);
    DistanceCert d = free_distance_generator_trellis(c);
    CHECK(d.value == 3);
    CHECK(d.exact);
    CHECK(d.kind == CertKind::ExactTrellis);
    CHECK(symbol_weight(d.witness) == 3);
}

TEST_CASE("generator trellis rejects catastrophic encoders") {
    const Field& f = make_field(2, 1);
    PolyMat g(f, 1, 2);
    g.at(0, 0) = Poly{1, 1};
    g.at(0, 1) = Poly{1, 0, 1};
    CHECK_THROWS_AS(free_distance_generator_trellis(make_conv_code(g)), CatastrophicEncoder);
}

TEST_CASE("generator trellis on a memory-0 code equals the block distance") {
    const Field& f = make_field(3, 1);
    PolyMat g(f, 2, 4);
    g.at(0, 0) = Poly{1}; g.at(0, 2) = Poly{1}; g.at(0, 3) = Poly{1};
    g.at(1, 1) = Poly{1}; g.at(1, 2) = Poly{1}; g.at(1, 3) = Poly{2};
    ConvCode c = make_conv_code(g);
    DistanceCert d = free_distance_generator_trellis(c);
    CHECK(d.value == 3);
    Mat blk(f, 2, 4);
    for (size_t r = 0; r < 2; ++r)
        for (size_t col = 0; col < 4; ++col) blk.at(r, col) = polyops::coeff(g.at(r, col), 0);
    CHECK(block_min_distance_exhaustive(blk) == d.value);
}

TEST_CASE("generator trellis respects the state budget") {
    const Field& f = make_field(2, 3);
    PolyMat g(f, 2, 3);
    g.at(0, 0) = Poly{1, 0, 1};
    g.at(0, 1) = Poly{0, 1};
    g.at(0, 2) = Poly{1};
    g.at(1, 0) = Poly{1};
    g.at(1, 1) = Poly{1, 1, 1};
    g.at(1, 2) = Poly{0, 0, 1};
    SearchBudget tiny;
    tiny.states = 7;  // 8^4 states needed
    CHECK_THROWS_AS(free_distance_generator_trellis(make_conv_code(g), tiny), BudgetExceeded);
}

TEST_CASE("syndrome trellis agrees with the generator trellis") {
    const Field& f = make_field(2, 1);
    PolyMat g(f, 1, 2);
    g.at(0, 0) = Poly{1};
    g.at(0, 1) = Poly{1, 1};
    ConvCode c = make_conv_code(g);
    ConvCode dual = euclidean_dual(c);
    DistanceCert ds = free_distance_syndrome_trellis(c, dual.G);
    CHECK(ds.value == 3);
    CHECK(ds.exact);
    CHECK(symbol_weight(ds.witness) == 3);
    // the witness really is a codeword
    PolyMat w(f, 1, 2);
    w.at(0, 0) = ds.witness[0];
    w.at(0, 1) = ds.witness[1];
    CHECK(is_orthogonal_pair(w, dual.G));
}

TEST_CASE("syndrome trellis validates the check matrix and the hint") {
    const Field& f = make_field(2, 1);
    PolyMat g(f, 1, 2);
    g.at(0, 0) = Poly{1};
    g.at(0, 1) = Poly{1, 1};
    ConvCode c = make_conv_code(g);
    // not orthogonal to G
    PolyMat bad(f, 1, 2);
    bad.at(0, 0) = Poly{1};
    bad.at(0, 1) = Poly{0, 1};
    CHECK_THROWS_AS(free_distance_syndrome_trellis(c, bad), InvalidCheckMatrix);
    ConvCode dual = euclidean_dual(c);
    // hint weight that does not match its witness
    std::vector<Poly> wit{Poly{1}, Poly{1, 1}};
    CHECK_THROWS_AS(free_distance_syndrome_trellis(c, dual.G, std::make_pair(5u, wit)),
                    InvalidCheckMatrix);
    // a correct hint: search confirms nothing lighter exists
    DistanceCert d = free_distance_syndrome_trellis(c, dual.G, std::make_pair(3u, wit));
    CHECK(d.value == 3);
    CHECK(d.exact);
    SearchBudget tiny;
    tiny.enumeration = 1;
    CHECK_THROWS_AS(free_distance_syndrome_trellis(c, dual.G, std::nullopt, tiny), BudgetExceeded);
}

TEST_CASE("both trellises agree on random small basic codes") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 6) {
        const Field& f = make_field(done % 2 ? 3 : 2, 1);
        std::uniform_int_distribution<uint32_t> dv(0, f.q - 1);
        PolyMat g(f, 1, 3);
        for (size_t c = 0; c < 3; ++c) {
            Poly p(2);
            for (auto& cf : p) cf = dv(rng);
            polyops::trim(p);
            g.at(0, c) = p;
        }
        if (poly_rank(g) != 1 || !is_row_reduced(g)) continue;
        try {
            if (!minor_gcd_is_unit(g)) continue;
        } catch (const BudgetExceeded&) {
            continue;
        }
        ConvCode c = make_conv_code(g);
        DistanceCert a = free_distance_generator_trellis(c);
        DistanceCert b = free_distance_syndrome_trellis(c, euclidean_dual(c).G);
        CHECK(a.value == b.value);
        ++done;
    }
}

TEST_CASE("budget environment variable override") {
    SearchBudget def;
    CHECK(def.states == 1000000);
    CHECK(def.enumeration == 100000000);
}
