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

#ifndef MOTIVEFORGE_WEIGHTS_HPP
#define MOTIVEFORGE_WEIGHTS_HPP

#include <array>
#include <string>
#include <vector>

namespace motiveforge {

using Weight = std::array<long, 5>;

/*
   <m, Q>: degree m with weight Q = (q_1..q_5), stored sorted ascending.
   Admissibility:
     (1) gcd of every 4-subset of Q is 1,
     (2) q_j | m for all j,
     (3) sum q_j = m.
*/
struct AdmissiblePair {
    long m = 0;
    Weight q{};

    std::array<long, 5> exponents() const {      // m_i = m / q_i
        return {m / q[0], m / q[1], m / q[2], m / q[3], m / q[4]};
    }
    long weight_product() const { return q[0] * q[1] * q[2] * q[3] * q[4]; }
    bool operator<(const AdmissiblePair& o) const {
        return m != o.m ? m < o.m : q < o.q;
    }
    bool operator==(const AdmissiblePair& o) const { return m == o.m && q == o.q; }
    std::string str() const;
};

// Returns true iff <m,Q> satisfies (1)-(3); on failure *why names the condition.
bool is_admissible(long m, const Weight& q, std::string* why = nullptr);

AdmissiblePair make_pair_checked(long m, const Weight& q);

// All 147 admissible pairs, sorted by (m, Q).
std::vector<AdmissiblePair> enumerate_admissible();

enum class StratumKind { None, Point, Curve };

struct SingularStratum {
    std::vector<int> in_s;          // indices j with m_j | ell  (0-based)
    long c = 1;                     // gcd of the q_j, j in S
    StratumKind kind = StratumKind::None;
    long ell_count = 0;             // how many ell in [1, m) share this S-pattern
    // curve data (kind == Curve)
    long m_reduced = 0;
    std::array<long, 3> q_reduced{};
    long genus = 0;
    long mult_mc = 0;               // c - 1
};

std::vector<SingularStratum> singular_strata(const AdmissiblePair& pair);

// Coefficient of t^{m' - (a+b+c)} in (1 - t^{m'}) / ((1-t^a)(1-t^b)(1-t^c)).
long curve_genus(long m_reduced, const std::array<long, 3>& q_reduced);

struct ResolutionSummary {
    std::vector<long long> beta;    // beta_0 .. beta_{m-1}
    long long b3_y = 0;
    long long b3_x = 0;
    long long chi = 0;
    long long h11 = 0;
    long long h21 = 0;
};

ResolutionSummary vafa_summary(const AdmissiblePair& pair);

// The one pair whose degree the source tables misprint; callers may attach a note.
bool has_printed_degree_discrepancy(const AdmissiblePair& pair);

}  // namespace motiveforge

#endif
