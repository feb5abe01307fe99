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

#include <algorithm>
#include <map>
#include <set>

#include "motiveforge/monomials.hpp"

using namespace motiveforge;

TEST_CASE("basis monomial cardinalities are (1, h21, h12, 1)") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    CHECK(monomial_basis(quintic, 0).size() == 1);
    CHECK(monomial_basis(quintic, 1).size() == 101);
    CHECK(monomial_basis(quintic, 2).size() == 101);
    auto top = monomial_basis(quintic, 3);
    REQUIRE(top.size() == 1);
    CHECK(top.front() == Exponents{3, 3, 3, 3, 3});

    // capped exponents biject with A(Q), so the middle levels count
    // h^{2,1}(Y); the resolution adds m_C * g(C) = 3 classes for the octic
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    CHECK(monomial_basis(octic, 1).size() == 83);
    CHECK(monomial_basis(octic, 2).size() == 83);
    CHECK(83 + aggregate(octic).curve_correction == 86);

    auto sextic = make_pair_checked(6, {1, 1, 1, 1, 2});
    CHECK(monomial_basis(sextic, 1).size() == 103);
}

TEST_CASE("invariant monomials") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto inv5 = invariant_monomials(quintic, build_ghat(quintic));
    std::set<Exponents> want5{{5, 0, 0, 0, 0}, {0, 5, 0, 0, 0}, {0, 0, 5, 0, 0},
                              {0, 0, 0, 5, 0}, {0, 0, 0, 0, 5}, {1, 1, 1, 1, 1}};
    CHECK(std::set<Exponents>(inv5.begin(), inv5.end()) == want5);

    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto inv8 = invariant_monomials(octic, build_ghat(octic));
    std::set<Exponents> want8{{8, 0, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 4, 0, 0},
                              {0, 0, 0, 4, 0}, {0, 0, 0, 0, 4}, {4, 4, 0, 0, 0},
                              {1, 1, 1, 1, 1}};
    CHECK(std::set<Exponents>(inv8.begin(), inv8.end()) == want8);
}

TEST_CASE("fundamental monomial invariant for every pair") {
    auto pairs = enumerate_admissible();
    for (size_t i = 0; i < pairs.size(); i += 7) {
        MirrorGroup g = build_ghat(pairs[i]);
        CHECK(is_invariant_exponent(g, {1, 1, 1, 1, 1}));
    }
}

TEST_CASE("quintic classes match the monomial table") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto classes = classify(quintic);
    REQUIRE(classes.size() == 6);

    struct Row { Exponents rep; long deg, mult, length; };
    const Row table[] = {
        {{0, 0, 0, 0, 0}, 0, 1, 5},  {{4, 1, 0, 0, 0}, 5, 20, 5},
        {{3, 2, 0, 0, 0}, 5, 20, 5}, {{3, 1, 1, 0, 0}, 5, 30, 5},
        {{2, 2, 1, 0, 0}, 5, 30, 5}, {{4, 0, 3, 2, 1}, 10, 24, 1},
    };
    for (const Row& row : table) {
        const MonomialClass* c = find_class(classes, row.rep);
        REQUIRE(c != nullptr);
        CHECK(c->rep == row.rep);
        CHECK(monomial_degree(quintic, row.rep) == row.deg);
        CHECK(c->addition_orbits == row.mult);
        CHECK(c->orbit_length == row.length);
    }
    // the whole space is covered: sum of mult * orbit size = 5^4 * 5 / 5
    long covered = 0;
    for (const auto& c : classes) covered += (long)c.members.size();
    CHECK(covered == 625);

    // worked orbit: the class of (4,1,0,0,0)
    const MonomialClass* c41 = find_class(classes, {4, 1, 0, 0, 0});
    for (Exponents v : {Exponents{0, 2, 1, 1, 1}, {1, 3, 2, 2, 2}, {2, 4, 3, 3, 3}, {3, 0, 4, 4, 4}})
        CHECK(std::binary_search(c41->members.begin(), c41->members.end(), v));
}

TEST_CASE("octic classes match the monomial table") {
    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto classes = classify(octic);
    REQUIRE(classes.size() == 15);

    // reps with the printed multiplicities; row (2,0,2,1,0) genuinely merges
    // twelve addition orbits (the printed 6 pairs with the motive column swap)
    struct Row { Exponents rep; long mult; };
    const Row table[] = {
        {{0, 0, 0, 0, 0}, 1}, {{0, 2, 1, 1, 1}, 2}, {{6, 2, 0, 0, 0}, 1},
        {{0, 0, 0, 2, 2}, 3}, {{2, 0, 1, 3, 3}, 6}, {{4, 0, 2, 0, 0}, 3},
        {{0, 0, 2, 1, 1}, 3}, {{2, 2, 1, 1, 0}, 3}, {{0, 4, 0, 3, 3}, 3},
        {{4, 0, 1, 1, 0}, 3}, {{2, 0, 3, 0, 0}, 6}, {{6, 0, 1, 0, 0}, 6},
        {{0, 0, 3, 1, 0}, 6}, {{2, 0, 2, 1, 0}, 12}, {{4, 0, 3, 2, 1}, 6},
    };
    long total_orbits = 0;
    for (const Row& row : table) {
        const MonomialClass* c = find_class(classes, row.rep);
        REQUIRE(c != nullptr);
        CHECK(c->rep == row.rep);
        CHECK(c->addition_orbits == row.mult);
        total_orbits += c->addition_orbits;
    }
    CHECK(total_orbits == 64);   // 512 vectors in orbits of length 8

    long covered = 0;
    for (const auto& c : classes) covered += (long)c.members.size();
    CHECK(covered == 512);
}

TEST_CASE("conifold classes have no zero-free member") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto classes5 = classify(quintic);
    const MonomialClass* c5 = find_class(classes5, {4, 0, 3, 2, 1});
    REQUIRE(c5 != nullptr);
    CHECK(c5->conifold_only);
    CHECK(c5->motive_labels.empty());
    // the five members listed in the worked example
    for (Exponents v : {Exponents{4, 0, 3, 2, 1}, {0, 1, 4, 3, 2}, {1, 2, 0, 4, 3},
                        {2, 3, 1, 0, 4}, {3, 4, 2, 1, 0}})
        CHECK(std::binary_search(c5->members.begin(), c5->members.end(), v));

    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto classes8 = classify(octic);
    const MonomialClass* c8 = find_class(classes8, {4, 0, 3, 2, 1});
    REQUIRE(c8 != nullptr);
    CHECK(c8->conifold_only);
    for (Exponents v : {Exponents{5, 1, 0, 3, 2}, {6, 2, 1, 0, 3}, {7, 3, 2, 1, 0},
                        {0, 4, 3, 2, 1}, {1, 5, 0, 3, 2}, {2, 6, 1, 0, 3}, {3, 7, 2, 1, 0}})
        CHECK(std::binary_search(c8->members.begin(), c8->members.end(), v));

    int conifolds5 = 0, conifolds8 = 0;
    for (const auto& c : classes5) conifolds5 += c.conifold_only;
    for (const auto& c : classes8) conifolds8 += c.conifold_only;
    CHECK(conifolds5 == 1);
    CHECK(conifolds8 == 1);
}

TEST_CASE("class-to-motive correspondence") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto classes5 = classify(quintic);
    const MonomialClass* c41 = find_class(classes5, {4, 1, 0, 0, 0});
    REQUIRE(c41 != nullptr);
    REQUIRE(c41->motive_labels.size() == 1);
    CHECK(c41->motive_labels.front() == canonical_label(quintic, {1, 1, 1, 3, 4}));

    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto classes8 = classify(octic);

    // printed correspondence rows (conifold row excluded)
    struct Row { Exponents rep; std::vector<Character> motives; };
    const Row rows[] = {
        {{0, 0, 0, 0, 0}, {{1, 1, 2, 2, 2}, {2, 2, 4, 4, 4}}},
        {{0, 2, 1, 1, 1}, {{3, 1, 4, 4, 4}, {6, 4, 2, 2, 2}}},
        {{6, 2, 0, 0, 0}, {{7, 3, 2, 2, 2}}},
        {{0, 0, 0, 2, 2}, {{3, 3, 2, 2, 6}}},
        {{2, 0, 1, 3, 3}, {{4, 2, 2, 2, 6}}},
        {{4, 0, 2, 0, 0}, {{5, 1, 2, 2, 6}}},
        {{0, 0, 2, 1, 1}, {{4, 4, 2, 2, 4}, {3, 3, 2, 4, 4}}},
        {{2, 2, 1, 1, 0}, {{3, 3, 2, 4, 4}, {4, 4, 2, 2, 4}}},
        {{0, 4, 0, 3, 3}, {{6, 2, 2, 2, 4}, {5, 1, 2, 4, 4}}},
        {{4, 0, 1, 1, 0}, {{5, 1, 2, 4, 4}, {6, 2, 2, 2, 4}}},
        {{2, 0, 3, 0, 0}, {{4, 2, 2, 4, 4}, {7, 1, 2, 2, 4}}},
        {{6, 0, 1, 0, 0}, {{7, 1, 2, 2, 4}, {4, 2, 2, 4, 4}}},
        {{0, 0, 3, 1, 0}, {{2, 2, 2, 4, 6}}},
        {{2, 0, 2, 1, 0}, {{3, 1, 2, 4, 6}}},
    };
    for (const Row& row : rows) {
        const MonomialClass* c = find_class(classes8, row.rep);
        REQUIRE(c != nullptr);
        std::set<Character> want;
        for (const Character& lab : row.motives) want.insert(canonical_label(octic, lab));
        std::set<Character> got(c->motive_labels.begin(), c->motive_labels.end());
        // intertwined classes share orbits; the printed motive must appear
        Character primary = canonical_label(octic, row.motives.front());
        CHECK(got.count(primary) == 1);
        for (const Character& lab : got) CHECK(want.count(lab) == 1);
    }

    // worked member chains
    const MonomialClass* c6 = find_class(classes8, {6, 0, 1, 0, 0});
    CHECK(std::binary_search(c6->members.begin(), c6->members.end(), Exponents{7, 1, 2, 1, 1}));
    CHECK(std::binary_search(c6->members.begin(), c6->members.end(), Exponents{3, 5, 2, 1, 1}));
}

TEST_CASE("motive-to-class correspondence and round trip") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    auto classes5 = classify(quintic);
    auto motives5 = motive_orbits(quintic);

    const MotiveOrbit* weight = find_motive(motives5, quintic, {1, 1, 1, 1, 1});
    auto back = motive_to_monomial(quintic, classes5, *weight);
    REQUIRE(back.size() == 1);
    CHECK(back.front()->rep == Exponents{0, 0, 0, 0, 0});

    // round trip: every non-conifold class is reachable from its own motives
    for (const MonomialClass& c : classify(quintic)) {
        if (c.conifold_only) continue;
        bool found = false;
        for (const Character& lab : c.motive_labels) {
            const MotiveOrbit* mo = find_motive(motives5, quintic, lab);
            REQUIRE(mo != nullptr);
            for (const MonomialClass* cc : motive_to_monomial(quintic, classes5, *mo))
                if (cc->rep == c.rep) found = true;
        }
        CHECK(found);
    }

    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    auto classes8 = classify(octic);
    auto motives8 = motive_orbits(octic);
    const MotiveOrbit* m224 = find_motive(motives8, octic, {2, 2, 4, 4, 4});
    auto back8 = motive_to_monomial(octic, classes8, *m224);
    REQUIRE(back8.size() == 1);
    CHECK(back8.front()->rep == Exponents{0, 0, 0, 0, 0});

    const MotiveOrbit* m316 = find_motive(motives8, octic, {3, 1, 2, 4, 6});
    auto back316 = motive_to_monomial(octic, classes8, *m316);
    REQUIRE(back316.size() == 1);
    CHECK(back316.front()->rep == Exponents{2, 0, 2, 1, 0});
}

TEST_CASE("mirror-invariant motives map to the constant class") {
    for (auto& pr : {make_pair_checked(5, {1, 1, 1, 1, 1}), make_pair_checked(8, {1, 1, 2, 2, 2})}) {
        auto classes = classify(pr);
        const MonomialClass* c0 = constant_class(classes);
        REQUIRE(c0 != nullptr);
        std::set<Character> expect(c0->motive_labels.begin(), c0->motive_labels.end());
        std::set<Character> inv;
        for (const MotiveOrbit& mo : invariant_motives(pr)) inv.insert(mo.label);
        CHECK(inv == expect);
    }
}

TEST_CASE("zero-free members account for the third Betti number") {
    for (auto& pr : {make_pair_checked(5, {1, 1, 1, 1, 1}), make_pair_checked(8, {1, 1, 2, 2, 2}),
                     make_pair_checked(6, {1, 1, 1, 1, 2})}) {
        long zero_free = 0;
        for (const MonomialClass& c : classify(pr)) zero_free += c.zero_free;
        CHECK(zero_free == aggregate(pr).b3_y);
    }
}
