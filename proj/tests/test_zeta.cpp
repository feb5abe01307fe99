/*
   Copyright 2026 The motiveforge authors

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

#include "doctest.h"

#include <cmath>
#include <complex>

#include "motiveforge/zeta.hpp"

using namespace motiveforge;

namespace {

IntPoly poly_from(std::vector<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return IntPoly(std::move(c));
}

IntPoly poly_pow(const IntPoly& p, long e) {
    IntPoly acc = IntPoly::one();
    for (long i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

}  // namespace

TEST_CASE("Jacobi character sums have absolute value q^{3/2}") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    FiniteField f = FiniteField::build(11, 1);
    for (const Character& a : {Character{1, 1, 1, 1, 1}, {1, 1, 1, 3, 4}, {1, 2, 3, 2, 2}}) {
        Cyclotomic s = jacobi_charsum(f, 5, a);
        for (long t : {1L, 2L, 3L, 4L}) {
            double mag = std::abs(s.embed(t));
            CHECK(mag == doctest::Approx(std::pow(11.0, 1.5)).epsilon(1e-6));
        }
    }
    (void)quintic;
}

TEST_CASE("Galois equivariance of the character sums") {
    FiniteField f = FiniteField::build(11, 1);
    Character a{1, 1, 1, 3, 4};
    Cyclotomic s = jacobi_charsum(f, 5, a);
    for (long t : {2L, 3L, 4L}) {
        Character ta;
        for (int i = 0; i < 5; ++i) ta[i] = (a[i] * t) % 5;
        CHECK(jacobi_charsum(f, 5, ta) == s.galois(t));
    }
}

TEST_CASE("Gauss sums: trivial character and norm") {
    FiniteField f = FiniteField::build(11, 1);
    TensorElt g0 = gauss_sum(f, 5, 0);
    CHECK(g0.zeta_p_free());
    CHECK(g0.scalar().rational_part() == -1);

    // |G(chi^a)|^2 = q via G * conj(G) = chi(-1) q for nontrivial characters
    TensorElt g1 = gauss_sum(f, 5, 1);
    // numeric via the tensor embedding: sum over components
    std::complex<double> total(0, 0);
    for (long j = 0; j < 10; ++j) {
        std::complex<double> zp = std::polar(1.0, 2.0 * M_PI * j / 11.0);
        if (j < (long)g1.comp.size()) total += g1.comp[j].embed(1) * zp;
    }
    CHECK(std::abs(total) == doctest::Approx(std::sqrt(11.0)).epsilon(1e-9));
}

TEST_CASE("Jacobi sums factor into Gauss-sum products") {
    // q S(a) = prod_i G(chi^{a_i}) in Z[zeta_m, zeta_p], per character
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    FiniteField f = FiniteField::build(17, 1);
    for (const Character& a : {Character{1, 1, 2, 2, 2}, {7, 1, 2, 2, 4}, {2, 2, 4, 4, 4}}) {
        TensorElt prod = gauss_sum(f, 8, a[0]);
        for (int i = 1; i < 5; ++i) prod = prod * gauss_sum(f, 8, a[i]);
        REQUIRE(prod.zeta_p_free());
        Cyclotomic lhs = jacobi_charsum(f, 8, a) * Cyclotomic::integer(8, 17);
        CHECK(lhs == prod.scalar());
    }
}

TEST_CASE("quintic local factors at q = 11") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto lf = local_factor(quintic, {1, 1, 1, 1, 1}, 11);
    CHECK(lf.poly == poly_from({1, 89, 3861, 118459, 1771561}));
    CHECK(lf.slopes == std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(Int(3861) == Int(27) * 11 * 13);
    CHECK(Int(118459) == Int(11) * 11 * 11 * 89);

    auto lf2 = local_factor(quintic, {1, 1, 1, 3, 4}, 11);
    auto lf3 = local_factor(quintic, {1, 1, 2, 2, 4}, 11);
    IntPoly expect = poly_from({1, -11, -1089, -14641, 1771561});
    CHECK(lf2.poly == expect);
    CHECK(lf3.poly == expect);
    CHECK(lf2.slopes == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}, {2, 1}, {2, 1}});

    // functional equation: c_{d-i} = q^{3(d-2i)/2} c_i for these quartics
    for (const auto& p : {lf.poly, lf2.poly}) {
        CHECK(p.coeff(4) == Int(11) * 11 * 11 * 11 * 11 * 11);
        CHECK(p.coeff(3) == p.coeff(1) * 11 * 11 * 11);
    }
}

TEST_CASE("octic local factors at q = 17") {
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto w = local_factor(octic, {1, 1, 2, 2, 2}, 17);
    Int q3 = Int(17) * 17 * 17;
    CHECK(w.poly == IntPoly({Int(1), Int(-180), Int(2) * 17 * 467, Int(-180) * q3, q3 * q3}));
    CHECK(w.slopes == std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

    auto grouped_square = [&](long c) {
        return poly_pow(IntPoly({Int(1), Int(c), q3}), 2);
    };
    CHECK(local_factor(octic, {1, 1, 2, 6, 6}, 17).poly == grouped_square(102));
    CHECK(local_factor(octic, {1, 1, 4, 4, 6}, 17).poly == grouped_square(102));
    CHECK(local_factor(octic, {1, 3, 2, 4, 6}, 17).poly == grouped_square(-102));
    CHECK(local_factor(octic, {1, 3, 4, 4, 4}, 17).poly == grouped_square(-102));
    CHECK(local_factor(octic, {1, 5, 2, 2, 6}, 17).poly == grouped_square(-34));
    CHECK(local_factor(octic, {1, 5, 2, 4, 4}, 17).poly == grouped_square(-34));
    CHECK(local_factor(octic, {1, 5, 6, 6, 6}, 17).poly == grouped_square(-34));
    // dimension-2 motives carry the quadratic itself
    CHECK(local_factor(octic, {2, 2, 4, 4, 4}, 17).poly == IntPoly({Int(1), Int(34), q3}));
    // a remaining dimension-4 motive
    CHECK(local_factor(octic, {7, 1, 2, 2, 4}, 17).poly == grouped_square(34));
}

TEST_CASE("octic local factors over F_121 and F_169") {
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});

    Int p6_11 = Int(11) * 11 * 11 * 11 * 11 * 11;
    IntPoly q11 = poly_pow(IntPoly({Int(1), Int(-2) * 7 * 121, p6_11}), 2);
    CHECK(local_factor(octic, {1, 1, 2, 2, 2}, 121).poly == q11);
    CHECK(local_factor(octic, {1, 1, 2, 6, 6}, 121).poly == q11);
    CHECK(local_factor(octic, {1, 1, 4, 4, 6}, 121).poly == q11);
    IntPoly q11b = poly_pow(IntPoly({Int(1), Int(2) * 7 * 121, p6_11}), 2);
    CHECK(local_factor(octic, {1, 3, 2, 4, 6}, 121).poly == q11b);
    CHECK(local_factor(octic, {1, 3, 4, 4, 4}, 121).poly == q11b);
    Int p3_11 = Int(11) * 11 * 11;
    CHECK(local_factor(octic, {2, 2, 4, 4, 4}, 121).poly == poly_pow(IntPoly({Int(1), -p3_11}), 2));
    CHECK(local_factor(octic, {7, 1, 2, 2, 4}, 121).poly == poly_pow(IntPoly({Int(1), p3_11}), 4));

    Int p6_13 = Int(13) * 13 * 13 * 13 * 13 * 13;
    Int p3_13 = Int(13) * 13 * 13;
    CHECK(local_factor(octic, {1, 1, 2, 2, 2}, 169).poly ==
          poly_pow(IntPoly({Int(1), Int(2) * 7 * 13 * 17, p6_13}), 2));
    CHECK(local_factor(octic, {1, 1, 2, 6, 6}, 169).poly == poly_pow(IntPoly({Int(1), -p3_13}), 4));
    CHECK(local_factor(octic, {1, 1, 4, 4, 6}, 169).poly == poly_pow(IntPoly({Int(1), -p3_13}), 4));
    CHECK(local_factor(octic, {1, 3, 2, 4, 6}, 169).poly == poly_pow(IntPoly({Int(1), -p3_13}), 4));
    CHECK(local_factor(octic, {1, 3, 4, 4, 4}, 169).poly == poly_pow(IntPoly({Int(1), -p3_13}), 4));
    CHECK(local_factor(octic, {2, 2, 4, 4, 4}, 169).poly ==
          IntPoly({Int(1), Int(2) * 5 * 169, p6_13}));
}

TEST_CASE("supersingular branch") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    // q = 16 = 2^4 with 2^2 = -1 mod 5: the Jacobi route must produce the
    // closed form (1 - 64 t)^4 for every motive
    IntPoly want = poly_pow(IntPoly({Int(1), Int(-64)}), 4);
    for (const MotiveOrbit& mo : motive_orbits(quintic))
        CHECK(local_factor(quintic, mo.label, 16).poly == want);
    // asking at q = 2 lifts to q = 2^4
    auto lifted = local_factor(quintic, {1, 1, 1, 1, 1}, 2);
    CHECK(lifted.poly == want);
    for (auto [n, d] : lifted.slopes) CHECK((n == 3 && d == 2));
    // intermediate powers are rejected: neither the prime nor the full lift
    CHECK_THROWS_AS(local_factor(quintic, {1, 1, 1, 1, 1}, 4), std::domain_error);
    // q = 3 has multiplicative order 4 mod 5 as well
    CHECK(local_factor(quintic, {1, 1, 2, 2, 4}, 3).poly ==
          poly_pow(IntPoly({Int(1), Int(-729)}), 4));
}

TEST_CASE("full products have the motivic degree") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto f5 = full_p3(quintic, 11);
    CHECK(f5.degree() == 204);
    CHECK(f5.coeff(0) == 1);
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto f8 = full_p3(octic, 17);
    CHECK(f8.degree() == 168);
    CHECK(f8.coeff(0) == 1);

    // class-group factorization reassembles the full product, and each
    // group factor has one reciprocal root per zero-free member
    IntPoly prod5 = IntPoly::one();
    for (const auto& g : class_group_factors(quintic, 11)) {
        CHECK(g.poly.degree() == g.zero_free);
        prod5 = prod5 * g.poly;
    }
    CHECK(prod5 == f5);
    IntPoly prod8 = IntPoly::one();
    for (const auto& g : class_group_factors(octic, 17)) {
        CHECK(g.poly.degree() == g.zero_free);
        prod8 = prod8 * g.poly;
    }
    CHECK(prod8 == f8);
}

TEST_CASE("three counting routes agree") {
    struct Fixture { long m; Weight q; long qq; };
    const Fixture fixtures[] = {
        {5, {1, 1, 1, 1, 1}, 11},
        {8, {1, 1, 2, 2, 2}, 17},
        {6, {1, 1, 1, 1, 2}, 7},
        {10, {1, 1, 1, 2, 5}, 11},
    };
    for (const Fixture& fx : fixtures) {
        auto pair = make_pair_checked(fx.m, fx.q);
        auto rep = count_routes(pair, fx.qq, true);
        CHECK(rep.weil_available);
        CHECK(rep.n_motive == rep.n_mon);
        CHECK(rep.routes_agree());
        REQUIRE(rep.n_brute_affine.has_value());
        Int qq(fx.qq);
        CHECK(*rep.n_brute_affine == qq * qq * qq * qq + (qq - 1) * rep.n_motive);
        CHECK(*rep.n_dwork_affine == *rep.n_brute_affine);
        // grouped per-class route
        FiniteField f = FiniteField::build(fx.qq, 1);
        CHECK(dwork_charsum_grouped(pair, f) == rep.n_mon);
    }
}

TEST_CASE("degenerate branch at q = 13 for the quintic") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto rep = count_routes(quintic, 13, true);
    CHECK_FALSE(rep.weil_available);
    CHECK(rep.n_mon == 0);   // no order-5 characters over F_13
    Int q4 = Int(13) * 13 * 13 * 13;
    CHECK(*rep.n_brute_affine == q4);
    CHECK(*rep.n_dwork_affine == q4);
    CHECK(rep.routes_agree());
}

TEST_CASE("octic degenerate branches collapse to lower-order characters") {
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    // 4 | q-1 but 8 !| q-1: only order-4 characters survive
    {
        auto rep = count_routes(octic, 13, true);
        CHECK_FALSE(rep.weil_available);
        Int q4 = Int(13) * 13 * 13 * 13;
        CHECK(*rep.n_brute_affine == q4 + Int(12) * rep.n_mon);
        CHECK(*rep.n_dwork_affine == *rep.n_brute_affine);
        CHECK(rep.n_mon != 0);
    }
    // 4 !| q-1: only the quadratic characters survive
    {
        auto rep = count_routes(octic, 23, true);
        CHECK_FALSE(rep.weil_available);
        Int q4 = Int(23) * 23 * 23 * 23;
        CHECK(*rep.n_brute_affine == q4 + Int(22) * rep.n_mon);
        CHECK(*rep.n_dwork_affine == *rep.n_brute_affine);
    }
}

TEST_CASE("mirror factor equals the constant-class factor") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto mf = mirror_factor(quintic, 11);
    CHECK(mf == local_factor(quintic, {1, 1, 1, 1, 1}, 11).poly);
    CHECK(mf == dwork_constant_class_factor(quintic, 11));
    CHECK(mf.degree() == 4);

    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto m8 = mirror_factor(octic, 17);
    CHECK(m8.degree() == 6);
    CHECK(m8 == dwork_constant_class_factor(octic, 17));
    IntPoly expect = local_factor(octic, {1, 1, 2, 2, 2}, 17).poly *
                     local_factor(octic, {2, 2, 4, 4, 4}, 17).poly;
    CHECK(m8 == expect);
}

TEST_CASE("prime power factorization") {
    CHECK(factor_prime_power(121) == std::pair<long, long>{11, 2});
    CHECK(factor_prime_power(16) == std::pair<long, long>{2, 4});
    CHECK(factor_prime_power(17) == std::pair<long, long>{17, 1});
    CHECK_THROWS(factor_prime_power(12));
}
