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

#ifndef MOTIVEFORGE_MOTIVES_HPP
#define MOTIVEFORGE_MOTIVES_HPP

#include <array>
#include <string>
#include <vector>

#include "motiveforge/weights.hpp"

namespace motiveforge {

// Character a = (a_1..a_5), entries normalized to 0 < a_i < m,
// a_i in q_i*(Z/m), sum a_i = 0 mod m.
using Character = std::array<long, 5>;

std::vector<Character> characters_AQ(const AdmissiblePair& pair);

// sorted-within-equal-weight-blocks normal form of one character
Character sort_within_weight_blocks(const AdmissiblePair& pair, Character a);

// lexicographically smallest block-sorted member of the scalar orbit of a
Character canonical_label(const AdmissiblePair& pair, Character a);

std::string label_str(const Character& a);

/*
   A Fermat motive: one (Z/m)^x scalar orbit together with the count of
   weight-permutation siblings collapsed into the same label.
*/
struct MotiveOrbit {
    Character label{};                    // canonical representative
    std::vector<Character> orbit;         // scalar orbit of the representative
    long dim = 0;                         // #orbit
    long mult = 0;                        // merged scalar orbits
    std::array<long, 4> hodge{};          // (h^{3,0}, h^{2,1}, h^{1,2}, h^{0,3}) per orbit
};

std::vector<MotiveOrbit> motive_orbits(const AdmissiblePair& pair);

const MotiveOrbit* find_motive(const std::vector<MotiveOrbit>& motives,
                               const AdmissiblePair& pair, const Character& any_member);

struct MotivicAggregate {
    long h30 = 0;
    long h21_y = 0;
    long b3_y = 0;
    long curve_correction = 0;    // sum over curves of m_C * g(C)
    long h21_x = 0;
    long b3_x = 0;
};

MotivicAggregate aggregate(const AdmissiblePair& pair);

/*
   Projector validation for the full Fermat group at small m: builds the
   scaled projectors m^4*p_A (integer coefficients) and checks idempotence,
   pairwise orthogonality and the decomposition of the identity under exact
   group-ring convolution.
*/
struct ProjectorReport {
    long m = 0;
    long orbit_count = 0;
    bool idempotent = true;
    bool orthogonal = true;
    bool sums_to_identity = true;
    bool coefficients_integral = true;   // scaled coefficients lie in Z
    long pairs_checked = 0;
    bool pass() const {
        return idempotent && orthogonal && sums_to_identity && coefficients_integral;
    }
};

// max_pairs < 0 checks every unordered pair; otherwise a deterministic sample.
ProjectorReport projector_check(long m, long max_pairs = -1);

}  // namespace motiveforge

#endif
