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

#ifndef MOTIVEFORGE_POLYTOPES_HPP
#define MOTIVEFORGE_POLYTOPES_HPP

#include <array>
#include <vector>

#include "motiveforge/weights.hpp"

namespace motiveforge {

using Point4 = std::array<long long, 4>;
using Point5 = std::array<long long, 5>;

/*
   Integral chart on the rank-4 lattice L = {x in Z^5 : sum q_i x_i = 0}.
   basis[t] has support in coordinates 0..t+1 with nonzero pivot at t+1,
   so chart coordinates are recovered by back substitution.  When the
   smallest weight is 1 the basis is e_{t+1} - q_{t+1} e_0 and the chart
   coordinates are plainly (x_2,...,x_5).
*/
struct Chart {
    std::array<Point5, 4> basis;

    Point5 from_chart(const Point4& c) const;
    Point4 to_chart(const Point5& x) const;   // throws if x not in L
};

Chart make_chart(const AdmissiblePair& pair);

struct Facet {
    Point4 n;          // primitive integer normal
    long long c = 0;   // <n, x> >= -c, c > 0 when origin interior
};

struct LatticePolytope {
    std::vector<Point4> vertices;
    std::vector<Facet> facets;
};

// facets of a full-dimensional polytope from its (few) vertices
std::vector<Facet> facets_from_vertices(const std::vector<Point4>& vertices);

// the 4-simplex Delta(Q) in the chart
LatticePolytope build_delta(const AdmissiblePair& pair, const Chart& chart);

// polar dual; throws on a non-integral dual vertex
LatticePolytope polar_dual(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);

// exact bounding-box scan
std::vector<Point4> lattice_points(const LatticePolytope& p);

/*
   Structural lattice-point data: points of Delta correspond to monomial
   exponents v >= 0 of degree m via x = v - 1, points of the dual to
   tuples u >= 0 of degree m whose associated dual vector is integral.
   Support pattern counts drive the combinatorial Hodge formulas.
*/
struct PolytopeCombinatorics {
    long l_delta = 0;
    long l_dual = 0;
    bool reflexive = false;
    long h11 = 0;
    long h21 = 0;
    long long codim2_correction_delta = 0;  // sum l'(face) l'(dual face), codim 2
    long long codim2_correction_dual = 0;
    std::vector<Point4> delta_points;       // chart coordinates
    std::vector<Point4> dual_points;        // dual chart coordinates
    std::vector<std::array<long long, 5>> delta_monomials;  // v with x = v - 1
};

PolytopeCombinatorics polytope_combinatorics(const AdmissiblePair& pair);

// lattice points lying in both polytopes, as 4-tuples in the common chart
std::vector<Point4> origin_intersection(const AdmissiblePair& pair);

std::pair<long, long> batyrev_hodge(const AdmissiblePair& pair);  // (h11, h21)

}  // namespace motiveforge

#endif
