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

#include "motiveforge/mirror.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "motiveforge/arith.hpp"

namespace motiveforge {

namespace {

std::array<long, 5> canonical_coset(const AdmissiblePair& pair, std::array<long, 5> e) {
    const long m = pair.m;
    std::array<long, 5> best = e;
    for (long t = 1; t < m; ++t) {
        std::array<long, 5> f;
        for (int i = 0; i < 5; ++i) f[i] = (e[i] + t * pair.q[i]) % m;
        if (f < best) best = f;
    }
    return best;
}

}  // namespace

MirrorGroup build_ghat(const AdmissiblePair& pair) {
    const long m = pair.m;
    const auto mi = pair.exponents();
    MirrorGroup G;
    G.m = m;
    G.q = pair.q;

    // enumerate the lattice {e : q_i | e_i, sum e_i = 0 mod m} by iterating the
    // four cheapest coordinates and solving for the one with largest m_i
    int solve_at = 0;
    for (int i = 1; i < 5; ++i)
        if (mi[i] > mi[solve_at]) solve_at = i;
    std::array<int, 4> idx{};
    int w = 0;
    for (int i = 0; i < 5; ++i)
        if (i != solve_at) idx[w++] = i;

    std::set<std::array<long, 5>> cosets;
    std::array<long, 4> k{0, 0, 0, 0};
    while (true) {
        long partial = 0;
        for (int t = 0; t < 4; ++t) partial += pair.q[idx[t]] * k[t];
        long rem = ((-partial) % m + m) % m;
        if (rem % pair.q[solve_at] == 0) {
            std::array<long, 5> e{};
            for (int t = 0; t < 4; ++t) e[idx[t]] = (pair.q[idx[t]] * k[t]) % m;
            e[solve_at] = rem;
            cosets.insert(canonical_coset(pair, e));
        }
        int pos = 3;
        while (pos >= 0) {
            if (++k[pos] < mi[idx[pos]]) break;
            k[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    G.elements.assign(cosets.begin(), cosets.end());
    G.order = (long)G.elements.size();

    long expected = m * m * m / pair.weight_product();
    if (G.order != expected)
        throw std::logic_error("mirror group order mismatch for " + pair.str());

    /*
       Elementary divisors from order statistics: for every prime p | order,
       the number of solutions of p^k * x = 0 determines the partition of the
       p-part.  Coset arithmetic: scalar multiples canonicalized.
    */
    const std::array<long, 5> zero = canonical_coset(pair, {0, 0, 0, 0, 0});
    auto scalar_mult = [&](long s, const std::array<long, 5>& e) {
        std::array<long, 5> f;
        for (int i = 0; i < 5; ++i) f[i] = (e[i] * s) % m;
        return canonical_coset(pair, f);
    };

    std::map<long, std::vector<int>> p_partitions;   // prime -> partition of exponents
    for (long p : prime_factors(G.order)) {
        std::vector<long> a_counts{0};                // a_k = log_p #{x : p^k x = 0}
        long s = 1;
        while (true) {
            s = (s * (p % m)) % m;
            long cnt = 0;
            for (const auto& e : G.elements)
                if (scalar_mult(s, e) == zero) ++cnt;
            long lg = 0, c = cnt;
            while (c % p == 0) { c /= p; ++lg; }
            if (c != 1) throw std::logic_error("p^k-torsion count is not a p-power");
            a_counts.push_back(lg);
            if (cnt == G.order || a_counts.size() > 40) break;
        }
        std::vector<int> part;
        for (size_t kk = 1; kk < a_counts.size(); ++kk) {
            long parts_ge_k = a_counts[kk] - a_counts[kk - 1];
            for (long t = 0; t < parts_ge_k; ++t) {
                if ((long)part.size() <= t) part.push_back(0);
                part[t]++;
            }
        }
        p_partitions[p] = part;
    }

    size_t maxlen = 0;
    for (auto& kv : p_partitions) maxlen = std::max(maxlen, kv.second.size());
    std::vector<long> divisors(maxlen, 1);
    for (auto& kv : p_partitions)
        for (size_t i = 0; i < kv.second.size(); ++i)
            for (int t = 0; t < kv.second[i]; ++t) divisors[i] *= kv.first;
    std::sort(divisors.begin(), divisors.end());
    G.elementary_divisors = divisors;

    long check = 1;
    for (long d : divisors) check *= d;
    if (check != G.order && G.order > 1)
        throw std::logic_error("elementary divisor product mismatch");

    return G;
}

bool is_invariant_exponent(const MirrorGroup& G, const std::array<long, 5>& v) {
    const long m = G.m;
    for (const auto& e : G.elements) {
        long dot = 0;
        for (int i = 0; i < 5; ++i) dot = (dot + e[i] * (v[i] % m)) % m;
        if (dot % m != 0) return false;
    }
    return true;
}

bool is_invariant(const MirrorGroup& G, const AdmissiblePair& pair, const Character& a) {
    if (G.m != pair.m || G.q != pair.q)
        throw std::invalid_argument("mirror group does not belong to this pair");
    std::array<long, 5> v;
    for (int i = 0; i < 5; ++i) {
        if (a[i] % pair.q[i] != 0)
            throw std::invalid_argument("character not supported on the weighted quotient");
        v[i] = a[i] / pair.q[i];
    }
    return is_invariant_exponent(G, v);
}

std::vector<MotiveOrbit> invariant_motives(const AdmissiblePair& pair) {
    MirrorGroup G = build_ghat(pair);
    std::vector<MotiveOrbit> out;
    for (const MotiveOrbit& mo : motive_orbits(pair)) {
        bool all = true;
        for (const Character& a : mo.orbit)
            if (!is_invariant(G, pair, a)) { all = false; break; }
        if (!all) continue;
        // invariance is a property of the merged label only when every
        // permutation sibling is also invariant; verify on one sibling set
        out.push_back(mo);
    }
    return out;
}

}  // namespace motiveforge
