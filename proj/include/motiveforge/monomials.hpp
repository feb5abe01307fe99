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

#ifndef MOTIVEFORGE_MONOMIALS_HPP
#define MOTIVEFORGE_MONOMIALS_HPP

#include <array>
#include <vector>

#include "motiveforge/mirror.hpp"
#include "motiveforge/motives.hpp"
#include "motiveforge/weights.hpp"

namespace motiveforge {

using Exponents = std::array<long, 5>;   // v, with v_i in [0, m_i)

// w(v) = sum q_i v_i
long monomial_degree(const AdmissiblePair& pair, const Exponents& v);

// degree k*m monomials with every v_i <= m_i - 2; cardinalities across
// k = 0..3 are (1, h^{2,1}, h^{1,2}, 1)
std::vector<Exponents> monomial_basis(const AdmissiblePair& pair, int k);

// degree-m monomials (exponents up to m_i) fixed by every group element
std::vector<Exponents> invariant_monomials(const AdmissiblePair& pair, const MirrorGroup& G);

struct MonomialClass {
    Exponents rep{};                      // table fixture if present, else lex-min
    std::vector<Exponents> members;       // whole class, sorted
    long addition_orbits = 0;             // number of addition orbits merged
    long orbit_size = 0;                  // raw size of one addition orbit
    long orbit_length = 0;                // permutation-distinct members per orbit
    long zero_free = 0;                   // members with all v_i != 0
    bool conifold_only = false;
    std::vector<Character> motive_labels; // canonical labels met by zero-free members
    int group_id = -1;                    // classes sharing a scalar orbit
};

/*
   Partition of {v in prod Z/m_i : w(v) = 0 mod m} under addition of the
   non-pure-power invariant monomials (componentwise mod m_i) and
   weight-preserving coordinate permutations.
*/
std::vector<MonomialClass> classify(const AdmissiblePair& pair);

// motives realized by the zero-free members of a class (empty = conifold)
std::vector<Character> monomial_to_motive(const AdmissiblePair& pair, const MonomialClass& cls);

// classes met by members of the motive orbit via v = a/q (usually one)
std::vector<const MonomialClass*> motive_to_monomial(const AdmissiblePair& pair,
                                                     const std::vector<MonomialClass>& classes,
                                                     const MotiveOrbit& motive);

const MonomialClass* find_class(const std::vector<MonomialClass>& classes, const Exponents& v);

// class containing the constant monomial (0,...,0)
const MonomialClass* constant_class(const std::vector<MonomialClass>& classes);

}  // namespace motiveforge

#endif
