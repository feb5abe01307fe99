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
#include <set>

#include "motiveforge/mirror.hpp"

using namespace motiveforge;

namespace {

// is e in the symmetry lattice modulo the projectively trivial phases?
bool coset_member(const AdmissiblePair& pair, std::array<long, 5> e) {
    const long m = pair.m;
    for (long t = 0; t < m; ++t) {
        bool ok = true;
        long sum = 0;
        for (int i = 0; i < 5; ++i) {
            long v = (e[i] + t * pair.q[i]) % m;
            if (v % pair.q[i] != 0) { ok = false; break; }
            sum += v;
        }
        if (ok && sum % m == 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("group orders and structures from the tables") {
    struct Row { long m; Weight q; long order; std::vector<long> divisors; };
    const Row rows[] = {
        {5, {1, 1, 1, 1, 1}, 125, {5, 5, 5}},
        {6, {1, 1, 1, 1, 2}, 108, {3, 6, 6}},
        {8, {1, 1, 1, 1, 4}, 128, {2, 8, 8}},
        {10, {1, 1, 1, 2, 5}, 100, {10, 10}},
        // the table prints (Z/8)^2, but the printed generators have order
        // four modulo the projective phases; the quotient is (Z/4)^3
        {8, {1, 1, 2, 2, 2}, 64, {4, 4, 4}},
        {12, {1, 1, 2, 2, 6}, 72, {2, 6, 6}},
        {12, {1, 2, 2, 3, 4}, 36, {6, 6}},
        {14, {1, 2, 2, 2, 7}, 49, {7, 7}},
        // the table prints (Z/3)x(Z/6)^2; the coset of (1,17,0,0,0) has
        // order 18, so the structure is (Z/6)x(Z/18)
        {18, {1, 1, 1, 6, 9}, 108, {6, 18}},
    };
    for (const Row& row : rows) {
        auto pair = make_pair_checked(row.m, row.q);
        MirrorGroup g = build_ghat(pair);
        CHECK(g.order == row.order);
        CHECK(g.elementary_divisors == row.divisors);
        CHECK(g.order * pair.weight_product() == row.m * row.m * row.m);
    }
}

TEST_CASE("printed generators lie in the group") {
    // table generators, as exponents of zeta_m
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    CHECK(coset_member(quintic, {1, 0, 0, 4, 0}));
    CHECK(coset_member(quintic, {1, 0, 4, 0, 0}));
    CHECK(coset_member(quintic, {1, 4, 0, 0, 0}));

    auto octic = make_pair_checked(8, {1, 1, 2, 2, 2});
    CHECK(coset_member(octic, {1, 7, 0, 0, 0}));
    CHECK(coset_member(octic, {7, 1, 0, 0, 0}));

    auto sextic = make_pair_checked(6, {1, 1, 1, 1, 2});
    CHECK(coset_member(sextic, {0, 2, 2, 2, 0}));
    CHECK(coset_member(sextic, {5, 0, 0, 1, 0}));
    CHECK(coset_member(sextic, {0, 5, 0, 1, 0}));

    // the m = 12 and m = 14 rows print exponents of zeta_{m_i}; convert
    auto pair12 = make_pair_checked(12, {1, 1, 2, 2, 6});
    auto conv = [](const AdmissiblePair& pr, std::array<long, 5> h) {
        std::array<long, 5> e;
        for (int i = 0; i < 5; ++i) e[i] = (h[i] * pr.q[i]) % pr.m;
        return e;
    };
    CHECK(coset_member(pair12, conv(pair12, {6, 6, 0, 0, 0})));
    CHECK(coset_member(pair12, conv(pair12, {4, 0, 2, 2, 0})));
    CHECK(coset_member(pair12, conv(pair12, {0, 4, 2, 2, 0})));

    auto pair14 = make_pair_checked(14, {1, 2, 2, 2, 7});
    CHECK(coset_member(pair14, conv(pair14, {2, 2, 2, 2, 4})));
    CHECK(coset_member(pair14, conv(pair14, {4, 4, 4, 4, 2})));

    auto pair18 = make_pair_checked(18, {1, 1, 1, 6, 9});
    CHECK(coset_member(pair18, {6, 6, 6, 0, 0}));
    CHECK(coset_member(pair18, {3, 3, 3, 0, 9}));
    // the printed third generator (3,3,3,3,6) satisfies neither exponent
    // convention; (3,3,3,6,3) does and is presumed intended
    CHECK_FALSE(coset_member(pair18, {3, 3, 3, 3, 6}));
    CHECK(coset_member(pair18, conv(pair18, {3, 3, 3, 6, 3})));
}

TEST_CASE("duality holds for every admissible pair") {
    for (const auto& pair : enumerate_admissible()) {
        MirrorGroup g = build_ghat(pair);
        CHECK(g.order * pair.weight_product() == pair.m * pair.m * pair.m);
    }
}

TEST_CASE("invariance of characters") {
    auto quintic = make_pair_checked(5, {1, 1, 1, 1, 1});
    MirrorGroup g = build_ghat(quintic);
    // the worked example: (1,0,0,4,0) fixes the weight, moves (1,1,1,3,4)
    std::array<long, 5> gen{1, 0, 0, 4, 0};
    long dot_weight = 0, dot_other = 0;
    Character weight{1, 1, 1, 1, 1}, other{1, 1, 1, 3, 4};
    for (int i = 0; i < 5; ++i) {
        dot_weight += gen[i] * weight[i];
        dot_other += gen[i] * other[i];
    }
    CHECK(dot_weight % 5 == 0);
    CHECK(dot_other % 5 != 0);
    CHECK(is_invariant(g, quintic, weight));
    CHECK_FALSE(is_invariant(g, quintic, other));
    CHECK_FALSE(is_invariant(g, quintic, {1, 1, 2, 2, 4}));

    // invariance is orbit stable
    for (const MotiveOrbit& mo : motive_orbits(quintic)) {
        bool first = is_invariant(g, quintic, mo.orbit.front());
        for (const Character& a : mo.orbit)
            CHECK(is_invariant(g, quintic, a) == first);
    }
}

TEST_CASE("weight motive is invariant for every pair") {
    for (const auto& pair : enumerate_admissible()) {
        MirrorGroup g = build_ghat(pair);
        Character weight;
        for (int i = 0; i < 5; ++i) weight[i] = pair.q[i];
        CHECK(is_invariant(g, pair, weight));
    }
}

TEST_CASE("invariant motives for the tabulated mirror pairs") {
    struct Row {
        long m; Weight q;
        std::vector<Character> labels;
        std::vector<long> dims;
    };
    const Row rows[] = {
        {5, {1, 1, 1, 1, 1}, {{1, 1, 1, 1, 1}}, {4}},
        {6, {1, 1, 1, 1, 2}, {{1, 1, 1, 1, 2}, {2, 2, 2, 2, 4}}, {2, 2}},
        {8, {1, 1, 1, 1, 4}, {{1, 1, 1, 1, 4}}, {4}},
        {10, {1, 1, 1, 2, 5}, {{1, 1, 1, 2, 5}}, {4}},
        {8, {1, 1, 2, 2, 2}, {{1, 1, 2, 2, 2}, {2, 2, 4, 4, 4}}, {4, 2}},
        {12, {1, 1, 2, 2, 6}, {{1, 1, 2, 2, 6}, {3, 3, 6, 6, 6}}, {4, 2}},
        {12, {1, 2, 2, 3, 4}, {{1, 2, 2, 3, 4}, {2, 4, 4, 6, 8}}, {4, 2}},
        {14, {1, 2, 2, 2, 7}, {{1, 2, 2, 2, 7}}, {6}},
        {18, {1, 1, 1, 6, 9}, {{1, 1, 1, 6, 9}}, {6}},
    };
    for (const Row& row : rows) {
        auto pair = make_pair_checked(row.m, row.q);
        auto inv = invariant_motives(pair);
        REQUIRE(inv.size() == row.labels.size());
        long sum_b3 = 0;
        for (size_t i = 0; i < row.labels.size(); ++i) {
            Character want = canonical_label(pair, row.labels[i]);
            bool found = false;
            for (const MotiveOrbit& mo : inv)
                if (mo.label == want) { found = true; CHECK(mo.dim == row.dims[i]); }
            CHECK(found);
        }
        for (const MotiveOrbit& mo : inv) sum_b3 += mo.dim;
        auto vs = vafa_summary(pair);
        CHECK(sum_b3 == 2 * (1 + vs.h11));
    }
}
