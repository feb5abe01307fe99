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

#include "motiveforge/monomials.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace motiveforge {

long monomial_degree(const AdmissiblePair& pair, const Exponents& v) {
    long w = 0;
    for (int i = 0; i < 5; ++i) w += pair.q[i] * v[i];
    return w;
}

std::vector<Exponents> monomial_basis(const AdmissiblePair& pair, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("basis level must be 0..3");
    const auto mi = pair.exponents();
    const long target = (long)k * pair.m;
    std::vector<Exponents> out;
    Exponents v{0, 0, 0, 0, 0};
    while (true) {
        if (monomial_degree(pair, v) == target) out.push_back(v);
        int pos = 4;
        while (pos >= 0) {
            if (++v[pos] <= mi[pos] - 2) break;
            v[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponents> invariant_monomials(const AdmissiblePair& pair, const MirrorGroup& G) {
    const auto mi = pair.exponents();
    std::vector<Exponents> out;
    Exponents v{0, 0, 0, 0, 0};
    while (true) {
        if (monomial_degree(pair, v) == pair.m && is_invariant_exponent(G, v))
            out.push_back(v);
        int pos = 4;
        while (pos >= 0) {
            if (++v[pos] <= mi[pos]) break;
            v[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// representatives printed in the source tables, for byte-stable output
const std::map<std::pair<long, Weight>, std::vector<Exponents>>& fixture_reps() {
    static const std::map<std::pair<long, Weight>, std::vector<Exponents>> reps = {
        {{5, {1, 1, 1, 1, 1}},
         {{0, 0, 0, 0, 0}, {4, 1, 0, 0, 0}, {3, 2, 0, 0, 0},
          {3, 1, 1, 0, 0}, {2, 2, 1, 0, 0}, {4, 0, 3, 2, 1}}},
        {{8, {1, 1, 2, 2, 2}},
         {{0, 0, 0, 0, 0}, {0, 2, 1, 1, 1}, {6, 2, 0, 0, 0}, {0, 0, 0, 2, 2},
          {2, 0, 1, 3, 3}, {4, 0, 2, 0, 0}, {0, 0, 2, 1, 1}, {2, 2, 1, 1, 0},
          {0, 4, 0, 3, 3}, {4, 0, 1, 1, 0}, {2, 0, 3, 0, 0}, {6, 0, 1, 0, 0},
          {0, 0, 3, 1, 0}, {2, 0, 2, 1, 0}, {4, 0, 3, 2, 1}}},
    };
    return reps;
}

std::vector<std::pair<int, int>> weight_transpositions(const AdmissiblePair& pair) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (pair.q[i] == pair.q[j]) out.emplace_back(i, j);
    return out;
}

Exponents sorted_within_blocks(const AdmissiblePair& pair, Exponents v) {
    int i = 0;
    while (i < 5) {
        int j = i;
        while (j < 5 && pair.q[j] == pair.q[i]) ++j;
        std::sort(v.begin() + i, v.begin() + j);
        i = j;
    }
    return v;
}

}  // namespace

std::vector<MonomialClass> classify(const AdmissiblePair& pair) {
    const auto mi = pair.exponents();
    MirrorGroup G = build_ghat(pair);

    // addition generators: invariant monomials that are not pure powers
    std::vector<Exponents> gens;
    for (const Exponents& w : invariant_monomials(pair, G)) {
        int support = 0;
        for (int i = 0; i < 5; ++i) support += (w[i] % mi[i]) != 0;
        if (support > 0) gens.push_back(w);   // pure powers reduce to 0 mod m_i
    }

    const auto swaps = weight_transpositions(pair);

    // classification space: all v in prod Z/m_i with w(v) = 0 mod m
    std::set<Exponents> unvisited;
    {
        Exponents v{0, 0, 0, 0, 0};
        while (true) {
            if (monomial_degree(pair, v) % pair.m == 0) unvisited.insert(v);
            int pos = 4;
            while (pos >= 0) {
                if (++v[pos] <= mi[pos] - 1) break;
                v[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }

    auto add_vec = [&](const Exponents& a, const Exponents& b) {
        Exponents r;
        for (int i = 0; i < 5; ++i) r[i] = (a[i] + b[i]) % mi[i];
        return r;
    };

    std::vector<MonomialClass> out;
    while (!unvisited.empty()) {
        Exponents seed = *unvisited.begin();

        // closure under additions only: one addition orbit
        auto addition_orbit_of = [&](const Exponents& s) {
            std::set<Exponents> orb{s};
            std::vector<Exponents> stack{s};
            while (!stack.empty()) {
                Exponents cur = stack.back();
                stack.pop_back();
                for (const Exponents& g : gens) {
                    Exponents nx = add_vec(cur, g);
                    if (orb.insert(nx).second) stack.push_back(nx);
                }
            }
            return orb;
        };

        // full class: closure under additions and weight permutations
        std::set<Exponents> cls{seed};
        std::vector<Exponents> stack{seed};
        while (!stack.empty()) {
            Exponents cur = stack.back();
            stack.pop_back();
            for (const Exponents& g : gens) {
                Exponents nx = add_vec(cur, g);
                if (cls.insert(nx).second) stack.push_back(nx);
            }
            for (auto [i, j] : swaps) {
                Exponents nx = cur;
                std::swap(nx[i], nx[j]);
                if (cls.insert(nx).second) stack.push_back(nx);
            }
        }

        MonomialClass rec;
        rec.members.assign(cls.begin(), cls.end());
        for (const Exponents& v : rec.members) unvisited.erase(v);

        std::set<Exponents> one_orbit = addition_orbit_of(seed);
        rec.orbit_size = (long)one_orbit.size();
        if ((long)cls.size() % rec.orbit_size != 0)
            throw std::logic_error("class size not a multiple of orbit size");
        rec.addition_orbits = (long)cls.size() / rec.orbit_size;

        std::set<Exponents> orbit_patterns;
        for (const Exponents& v : one_orbit) orbit_patterns.insert(sorted_within_blocks(pair, v));
        rec.orbit_length = (long)orbit_patterns.size();

        std::set<Character> labels;
        for (const Exponents& v : rec.members) {
            bool zero_free = true;
            for (int i = 0; i < 5; ++i)
                if (v[i] == 0) { zero_free = false; break; }
            if (!zero_free) continue;
            rec.zero_free++;
            Character a;
            for (int i = 0; i < 5; ++i) a[i] = (pair.q[i] * v[i]) % pair.m;
            labels.insert(canonical_label(pair, a));
        }
        rec.conifold_only = (rec.zero_free == 0);
        rec.motive_labels.assign(labels.begin(), labels.end());

        // representative: table fixture when one lies in this class, else lex-min
        rec.rep = rec.members.front();
        auto fit = fixture_reps().find({pair.m, pair.q});
        if (fit != fixture_reps().end()) {
            for (const Exponents& r : fit->second)
                if (cls.count(r)) { rec.rep = r; break; }
        }
        out.push_back(std::move(rec));
    }

    // order: constant class first, then by (degree of rep, rep)
    std::sort(out.begin(), out.end(), [&](const MonomialClass& a, const MonomialClass& b) {
        long da = monomial_degree(pair, a.rep), db = monomial_degree(pair, b.rep);
        if (da != db) return da < db;
        return a.rep < b.rep;
    });

    // group classes sharing a scalar orbit (their factors combine to integer
    // polynomials only jointly)
    std::map<Character, std::vector<int>> touch;   // orbit rep -> class ids
    for (int ci = 0; ci < (int)out.size(); ++ci) {
        for (const Exponents& v : out[ci].members) {
            bool zero_free = true;
            for (int i = 0; i < 5; ++i)
                if (v[i] == 0) { zero_free = false; break; }
            if (!zero_free) continue;
            Character a;
            for (int i = 0; i < 5; ++i) a[i] = (pair.q[i] * v[i]) % pair.m;
            // orbit identity: the lexicographically smallest orbit member
            Character best = a;
            for (long t = 2; t < pair.m; ++t) {
                if (std::gcd(t, pair.m) != 1) continue;
                Character b;
                for (int i = 0; i < 5; ++i) b[i] = (a[i] * t) % pair.m;
                if (b < best) best = b;
            }
            touch[best].push_back(ci);
        }
    }
    std::vector<int> parent(out.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& kv : touch)
        for (size_t i = 1; i < kv.second.size(); ++i)
            parent[find(kv.second[i])] = find(kv.second[0]);
    std::map<int, int> gid;
    for (int ci = 0; ci < (int)out.size(); ++ci) {
        int root = find(ci);
        if (!gid.count(root)) gid[root] = (int)gid.size();
        out[ci].group_id = gid[root];
    }
    return out;
}

std::vector<Character> monomial_to_motive(const AdmissiblePair& pair, const MonomialClass& cls) {
    (void)pair;
    return cls.motive_labels;
}

const MonomialClass* find_class(const std::vector<MonomialClass>& classes, const Exponents& v) {
    for (const MonomialClass& c : classes)
        if (std::binary_search(c.members.begin(), c.members.end(), v)) return &c;
    return nullptr;
}

std::vector<const MonomialClass*> motive_to_monomial(const AdmissiblePair& pair,
                                                     const std::vector<MonomialClass>& classes,
                                                     const MotiveOrbit& motive) {
    std::vector<const MonomialClass*> out;
    for (const Character& a : motive.orbit) {
        Exponents v;
        for (int i = 0; i < 5; ++i) {
            if (a[i] % pair.q[i] != 0)
                throw std::logic_error("character entry not divisible by its weight");
            v[i] = a[i] / pair.q[i];
        }
        const MonomialClass* c = find_class(classes, v);
        if (!c) throw std::logic_error("character image not found in classification");
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

const MonomialClass* constant_class(const std::vector<MonomialClass>& classes) {
    return find_class(classes, {0, 0, 0, 0, 0});
}

}  // namespace motiveforge
