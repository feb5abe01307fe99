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

#ifndef MOTIVEFORGE_MIRROR_HPP
#define MOTIVEFORGE_MIRROR_HPP

#include <array>
#include <vector>

#include "motiveforge/motives.hpp"
#include "motiveforge/weights.hpp"

namespace motiveforge {

/*
   The discrete symmetry group of the mirror construction: exponent vectors
   e with q_i | e_i and sum e_i = 0 mod m, taken modulo the projectively
   trivial phases t*(q_1..q_5).  Cosets are stored as their lexicographically
   smallest member.  The order is m^3 / (q_1...q_5).
*/
struct MirrorGroup {
    long m = 0;
    Weight q{};
    std::vector<std::array<long, 5>> elements;
    long order = 0;
    std::vector<long> elementary_divisors;   // ascending, each dividing the next
};

MirrorGroup build_ghat(const AdmissiblePair& pair);

// e (ghat element) applied to the monomial exponent vector v = a/q:
// invariant iff sum e_i * v_i = 0 mod m.  Well defined on cosets because
// w(v) = 0 mod m.
bool is_invariant_exponent(const MirrorGroup& G, const std::array<long, 5>& v);

// character-level invariance (v_i = a_i / q_i)
bool is_invariant(const MirrorGroup& G, const AdmissiblePair& pair, const Character& a);

std::vector<MotiveOrbit> invariant_motives(const AdmissiblePair& pair);

}  // namespace motiveforge

#endif
