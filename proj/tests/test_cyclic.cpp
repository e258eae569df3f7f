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
#include <numeric>

using namespace mdsconv;

TEST_CASE("cyclotomic cosets modulo q+1 pair s with n-s") {
    auto c = coset(9, 8, 3);
    CHECK(c.rep == 3);
    CHECK(c.elements == std::vector<uint32_t>{3, 6});
    CHECK(coset(17, 16, 8).elements == std::vector<uint32_t>{8, 9});
    CHECK(coset(17, 16, 7).elements == std::vector<uint32_t>{7, 10});
    CHECK(coset(17, 16, 6).elements == std::vector<uint32_t>{6, 11});
    // odd q: the coset of a = n/2 is a singleton
    CHECK(coset(10, 9, 5).elements == std::vector<uint32_t>{5});
    CHECK(coset(10, 9, 3).elements == std::vector<uint32_t>{3, 7});
    CHECK_THROWS_AS(coset(9, 3, 1), NotCoprime);
}

TEST_CASE("multiplicative order of q mod q+1 is 2") {
    CHECK(mult_order(9, 8) == 2);
    CHECK(mult_order(17, 16) == 2);
    CHECK(mult_order(65, 64) == 2);
    CHECK(mult_order(7, 2) == 3);
    CHECK_THROWS_AS(mult_order(9, 6), NotCoprime);
}

TEST_CASE("minimal polynomials multiply to x^n - 1") {
    const Field& b = make_field(2, 3);
    const Field& e = make_field(2, 6);
    const Embedding& emb = Embedding::get(b, e);
    uint32_t alpha = primitive_nth_root(9, e);
    std::set<uint32_t> reps;
    for (uint32_t s = 0; s < 9; ++s) reps.insert(coset(9, 8, s).rep);
    Poly prod{1};
    for (uint32_t r : reps) {
        Poly mp = minimal_polynomial(r, 9, emb, alpha);
        CHECK((size_t)polyops::deg(mp) == coset(9, 8, r).elements.size());
        CHECK(mp.back() == 1);  // monic
        prod = polyops::mul(b, prod, mp);
    }
    Poly xn1(10, 0);
    xn1[0] = b.neg(1);
    xn1[9] = 1;
    CHECK(prod == xn1);
}

TEST_CASE("minimal polynomial has exactly the coset powers as roots") {
    const Field& b = make_field(3, 2);
    const Field& e = make_field(3, 4);
    const Embedding& emb = Embedding::get(b, e);
    uint32_t alpha = primitive_nth_root(10, e);
    Poly mp = minimal_polynomial(3, 10, emb, alpha);
    Poly lifted(mp.size());
    for (size_t i = 0; i < mp.size(); ++i) lifted[i] = emb.embed(mp[i]);
    for (uint32_t j = 0; j < 10; ++j) {
        bool in_coset = (j == 3 || j == 7);
        CHECK((polyops::eval(e, lifted, e.pow(alpha, j)) == 0) == in_coset);
    }
}

TEST_CASE("longest cyclic consecutive run") {
    CHECK(longest_consecutive_run({6, 7, 8, 9, 10, 11}, 17) == std::pair<uint32_t, uint32_t>{6, 6});
    CHECK(longest_consecutive_run({0, 1, 16}, 17) == std::pair<uint32_t, uint32_t>{16, 3});
    CHECK(longest_consecutive_run({3, 6}, 9) == std::pair<uint32_t, uint32_t>{3, 1});
    CHECK(longest_consecutive_run({}, 9) == std::pair<uint32_t, uint32_t>{0, 0});
    CHECK(bch_bound({6, 7, 8, 9, 10, 11}, 17) == 7);
}

TEST_CASE("worked narrow-sense style codes at q=16, n=17") {
    const Field& b = make_field(2, 4);
    const Field& e = make_field(2, 8);
    const Embedding& emb = Embedding::get(b, e);
    uint32_t alpha = primitive_nth_root(17, e);
    BchSpec c2 = bch_code(17, b, {8, 7, 6}, emb, alpha);
    CHECK(c2.k == 11);
    CHECK(c2.delta == 7);
    CHECK(c2.Z == std::vector<uint32_t>{6, 7, 8, 9, 10, 11});
    BchSpec c1 = bch_code(17, b, {8, 7}, emb, alpha);
    CHECK(c1.k == 13);
    CHECK(c1.delta == 5);
    BchSpec c = bch_code(17, b, {6}, emb, alpha);
    CHECK(c.k == 15);
    CHECK(c.delta == 2);
    // duplicate representatives do not double-count cosets
    CHECK(bch_code(17, b, {8, 9, 8}, emb, alpha).k == 15);
}

TEST_CASE("generator polynomial degree equals the defining set size") {
    const Field& b = make_field(2, 3);
    const Field& e = make_field(2, 6);
    const Embedding& emb = Embedding::get(b, e);
    uint32_t alpha = primitive_nth_root(9, e);
    BchSpec s = bch_code(9, b, {4, 3}, emb, alpha);
    CHECK((uint32_t)polyops::deg(s.g) == (uint32_t)s.Z.size());
    // codewords x^j g(x) are annihilated by the expanded parity matrix
    ExpandResult h = bch_parity_matrix({4, 3}, 9, emb, alpha);
    CHECK(h.mat.rows == s.Z.size());
    for (uint32_t sh = 0; sh < s.k; ++sh) {
        std::vector<uint32_t> cw(9, 0);
        for (size_t i = 0; i < s.g.size(); ++i) cw[i + sh] = s.g[i];
        for (uint32_t v : mul_vec_mt(h.mat, cw)) CHECK(v == 0);
    }
}

TEST_CASE("dependent expanded parity rows are dropped for the singleton coset") {
    // odd q: alpha^a = -1 lies in the base field, so the second coordinate row
    // of the exponent-a expansion is dependent
    const Field& b = make_field(3, 2);
    const Field& e = make_field(3, 4);
    const Embedding& emb = Embedding::get(b, e);
    uint32_t alpha = primitive_nth_root(10, e);
    CHECK(e.pow(alpha, 5) == emb.embed(b.neg(1)));
    ExpandResult res = bch_parity_matrix({5}, 10, emb, alpha);
    CHECK(res.mat.rows == 1);
    CHECK(res.dropped == 1);
    ExpandResult res2 = bch_parity_matrix({4}, 10, emb, alpha);
    CHECK(res2.mat.rows == 2);
    CHECK(res2.dropped == 0);
}
