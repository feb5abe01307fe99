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

#include "motiveforge/motives.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "motiveforge/arith.hpp"

namespace motiveforge {

std::vector<Character> characters_AQ(const AdmissiblePair& pair) {
    const long m = pair.m;
    const auto mi = pair.exponents();
    std::vector<Character> out;

    // iterate k_i in [1, m_i) over the four coordinates with smallest m_i,
    // solve the congruence for the remaining one
    int solve_at = 0;
    for (int i = 1; i < 5; ++i)
        if (mi[i] > mi[solve_at]) solve_at = i;

    std::array<int, 4> idx{};
    int w = 0;
    for (int i = 0; i < 5; ++i)
        if (i != solve_at) idx[w++] = i;

    std::array<long, 4> k{1, 1, 1, 1};
    while (true) {
        long partial = 0;
        for (int t = 0; t < 4; ++t) partial += pair.q[idx[t]] * k[t];
        long rem = ((-partial) % m + m) % m;           // q_s * k_s must equal rem mod m
        if (rem != 0 && rem % pair.q[solve_at] == 0) {
            Character a{};
            for (int t = 0; t < 4; ++t) a[idx[t]] = pair.q[idx[t]] * k[t];
            a[solve_at] = rem;
            out.push_back(a);
        }
        int pos = 3;
        while (pos >= 0) {
            if (++k[pos] < mi[idx[pos]]) break;
            k[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Character sort_within_weight_blocks(const AdmissiblePair& pair, Character a) {
    int i = 0;
    while (i < 5) {
        int j = i;
        while (j < 5 && pair.q[j] == pair.q[i]) ++j;
        std::sort(a.begin() + i, a.begin() + j);
        i = j;
    }
    return a;
}

namespace {

std::vector<Character> scalar_orbit(const AdmissiblePair& pair, const Character& a) {
    std::set<Character> seen;
    for (long t = 1; t < pair.m; ++t) {
        if (std::gcd(t, pair.m) != 1) continue;
        Character b;
        for (int i = 0; i < 5; ++i) b[i] = (a[i] * t) % pair.m;
        seen.insert(b);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

Character canonical_label(const AdmissiblePair& pair, Character a) {
    Character best{};
    bool first = true;
    for (const Character& b : scalar_orbit(pair, a)) {
        Character s = sort_within_weight_blocks(pair, b);
        if (first || s < best) { best = s; first = false; }
    }
    return best;
}

std::string label_str(const Character& a) {
    std::ostringstream os;
    os << "[" << a[0];
    for (int i = 1; i < 5; ++i) os << "," << a[i];
    os << "]";
    return os.str();
}

std::vector<MotiveOrbit> motive_orbits(const AdmissiblePair& pair) {
    const long m = pair.m;
    std::vector<Character> chars = characters_AQ(pair);
    std::set<Character> unseen(chars.begin(), chars.end());

    // split into scalar orbits first
    struct RawOrbit { std::vector<Character> members; Character label; };
    std::vector<RawOrbit> raw;
    while (!unseen.empty()) {
        Character a = *unseen.begin();
        RawOrbit ro;
        ro.members = scalar_orbit(pair, a);
        for (const Character& b : ro.members) unseen.erase(b);
        ro.label = canonical_label(pair, a);
        raw.push_back(std::move(ro));
    }

    // orbit size must be phi(m / gcd(a, m))
    for (const RawOrbit& ro : raw) {
        long g = m;
        for (long v : ro.members.front()) g = std::gcd(g, v);
        if ((long)ro.members.size() != euler_phi(m / g))
            throw std::logic_error("scalar orbit size mismatch");
    }

    std::map<Character, MotiveOrbit> by_label;
    for (const RawOrbit& ro : raw) {
        auto it = by_label.find(ro.label);
        std::array<long, 4> hv{0, 0, 0, 0};
        for (const Character& b : ro.members) {
            long s = 0;
            for (long v : b) s += v;
            if (s % m != 0) throw std::logic_error("character sum not divisible by m");
            long norm = s / m - 1;
            if (norm < 0 || norm > 3) throw std::logic_error("character norm out of range");
            hv[norm]++;
        }
        if (it == by_label.end()) {
            MotiveOrbit mo;
            mo.label = ro.label;
            mo.orbit = scalar_orbit(pair, ro.label);
            mo.dim = (long)ro.members.size();
            mo.mult = 1;
            mo.hodge = hv;
            by_label.emplace(ro.label, std::move(mo));
        } else {
            MotiveOrbit& mo = it->second;
            if (mo.dim != (long)ro.members.size() || mo.hodge != hv)
                throw std::logic_error("permutation-merged orbits disagree");
            mo.mult++;
        }
    }

    std::vector<MotiveOrbit> out;
    for (auto& kv : by_label) out.push_back(std::move(kv.second));
    return out;
}

const MotiveOrbit* find_motive(const std::vector<MotiveOrbit>& motives,
                               const AdmissiblePair& pair, const Character& any_member) {
    Character lab = canonical_label(pair, any_member);
    for (const MotiveOrbit& mo : motives)
        if (mo.label == lab) return &mo;
    return nullptr;
}

MotivicAggregate aggregate(const AdmissiblePair& pair) {
    MotivicAggregate agg;
    for (const MotiveOrbit& mo : motive_orbits(pair)) {
        agg.h30 += mo.hodge[0] * mo.mult;
        agg.h21_y += mo.hodge[1] * mo.mult;
        agg.b3_y += mo.dim * mo.mult;
    }
    long corr = 0;
    for (const SingularStratum& st : singular_strata(pair))
        if (st.kind == StratumKind::Curve) corr += st.mult_mc * st.genus;
    agg.curve_correction = corr;
    agg.h21_x = agg.h21_y + corr;
    agg.b3_x = agg.b3_y + 2 * corr;
    return agg;
}

/* ---------------------------------------------------------------- */
/* projectors                                                       */

namespace {

// scaled projector m^4 * p_A as an integer group-ring element
GroupRingInt scaled_projector(const FermatGroup& G,
                              const std::vector<std::array<long, 5>>& orbit,
                              bool* integral_ok) {
    const long m = G.m;
    GroupRingInt P(G);
    for (long idx = 0; idx < G.size; ++idx) {
        std::array<long, 5> e = G.unpack(idx);
        // sum over the orbit of zeta^{-<a, e>}; the result is a rational integer
        Cyclotomic acc(m);
        for (const auto& a : orbit) {
            long dot = 0;
            for (int i = 0; i < 5; ++i) dot += a[i] * e[i];
            acc += Cyclotomic::zeta_pow(m, -(dot % m));
        }
        if (!acc.is_rational()) {
            *integral_ok = false;
            return P;
        }
        P.c[idx] = acc.rational_part().get_si();
    }
    return P;
}

bool equal_scaled(const GroupRingInt& conv, const GroupRingInt& target, long scale) {
    for (long i = 0; i < conv.grp->size; ++i)
        if (conv.c[i] != scale * target.c[i]) return false;
    return true;
}

bool is_zero_ring(const GroupRingInt& z) {
    for (long long v : z.c)
        if (v) return false;
    return true;
}

}  // namespace

ProjectorReport projector_check(long m, long max_pairs) {
    if (m > 6) throw std::invalid_argument("projector check limited to m <= 6");
    ProjectorReport rep;
    rep.m = m;
    FermatGroup G(m);

    // orbits of the full character group {a : sum a_i = 0 mod m}
    std::set<std::array<long, 5>> unseen;
    {
        std::array<long, 5> a{};
        std::function<void(int, long)> rec = [&](int pos, long sum) {
            if (pos == 4) {
                a[4] = ((-sum) % m + m) % m;
                unseen.insert(a);
                return;
            }
            for (long v = 0; v < m; ++v) { a[pos] = v; rec(pos + 1, sum + v); }
        };
        rec(0, 0);
    }

    std::vector<std::vector<std::array<long, 5>>> orbits;
    while (!unseen.empty()) {
        std::array<long, 5> a = *unseen.begin();
        std::set<std::array<long, 5>> orbit;
        for (long t = 1; t < m; ++t) {
            if (std::gcd(t, m) != 1) continue;
            std::array<long, 5> b;
            for (int i = 0; i < 5; ++i) b[i] = (a[i] * t) % m;
            orbit.insert(b);
        }
        if (m == 1) orbit.insert(a);
        for (const auto& b : orbit) unseen.erase(b);
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    rep.orbit_count = (long)orbits.size();

    const long scale = G.size;   // convolution of scaled projectors gains m^4
    std::vector<GroupRingInt> projs;
    projs.reserve(orbits.size());
    for (const auto& orb : orbits) {
        bool ok = true;
        projs.push_back(scaled_projector(G, orb, &ok));
        if (!ok) rep.coefficients_integral = false;
    }
    if (!rep.coefficients_integral) return rep;

    // sum of all scaled projectors = m^4 * identity
    {
        GroupRingInt total(G);
        for (const auto& P : projs)
            for (long i = 0; i < G.size; ++i) total.c[i] += P.c[i];
        GroupRingInt identity(G);
        identity.c[G.pack({0, 0, 0, 0, 0})] = 1;
        if (!equal_scaled(total, identity, scale)) rep.sums_to_identity = false;
    }

    for (size_t i = 0; i < projs.size(); ++i) {
        GroupRingInt sq = convolve(projs[i], projs[i]);
        if (!equal_scaled(sq, projs[i], scale)) { rep.idempotent = false; break; }
    }

    long budget = max_pairs;
    for (size_t i = 0; i < projs.size() && rep.orthogonal; ++i) {
        for (size_t j = i + 1; j < projs.size(); ++j) {
            if (max_pairs >= 0 && budget-- <= 0) break;
            GroupRingInt prod = convolve(projs[i], projs[j]);
            rep.pairs_checked++;
            if (!is_zero_ring(prod)) { rep.orthogonal = false; break; }
        }
        if (max_pairs >= 0 && budget <= 0) break;
    }
    return rep;
}

}  // namespace motiveforge
