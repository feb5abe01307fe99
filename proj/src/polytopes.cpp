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

#include "motiveforge/polytopes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "motiveforge/arith.hpp"

namespace motiveforge {

namespace {

using I128 = __int128;

long long checked_ll(I128 v) {
    if (v > I128(0x7fffffffffffffffLL) || v < -I128(0x7fffffffffffffffLL))
        throw std::overflow_error("polytope arithmetic overflow");
    return (long long)v;
}

long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

}  // namespace

Chart make_chart(const AdmissiblePair& pair) {
    Chart ch{};
    if (pair.q[0] == 1) {
        for (int t = 0; t < 4; ++t) {
            ch.basis[t] = {0, 0, 0, 0, 0};
            ch.basis[t][0] = -pair.q[t + 1];
            ch.basis[t][t + 1] = 1;
        }
        return ch;
    }
    // gcd sweep: after step t the prefix combination cof achieves g = gcd(q_0..q_t)
    long long g = pair.q[0];
    std::array<long long, 5> cof{1, 0, 0, 0, 0};
    for (int t = 0; t < 4; ++t) {
        long long a = g, b = pair.q[t + 1];
        // extended gcd
        long long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b) {
            long long qq = a / b;
            std::swap(a -= qq * b, b);
            std::swap(x0 -= qq * x1, x1);
            std::swap(y0 -= qq * y1, y1);
        }
        long long gnew = a, u = x0, v = y0;   // u*g + v*q_{t+1} = gnew
        ch.basis[t] = {0, 0, 0, 0, 0};
        for (int i = 0; i <= t; ++i) ch.basis[t][i] = (pair.q[t + 1] / gnew) * cof[i];
        ch.basis[t][t + 1] = -(g / gnew);
        std::array<long long, 5> ncof{0, 0, 0, 0, 0};
        for (int i = 0; i <= t; ++i) ncof[i] = u * cof[i];
        ncof[t + 1] = v;
        cof = ncof;
        g = gnew;
    }
    if (g != 1) throw std::logic_error("weights are not coprime");
    return ch;
}

Point5 Chart::from_chart(const Point4& c) const {
    Point5 x{0, 0, 0, 0, 0};
    for (int t = 0; t < 4; ++t)
        for (int i = 0; i < 5; ++i) x[i] = checked_ll(I128(x[i]) + I128(c[t]) * basis[t][i]);
    return x;
}

Point4 Chart::to_chart(const Point5& x_in) const {
    Point5 x = x_in;
    Point4 c{0, 0, 0, 0};
    for (int t = 3; t >= 0; --t) {
        long long piv = basis[t][t + 1];
        if (x[t + 1] % piv != 0) throw std::invalid_argument("point not in the weight lattice");
        c[t] = x[t + 1] / piv;
        for (int i = 0; i < 5; ++i) x[i] -= c[t] * basis[t][i];
    }
    for (int i = 0; i < 5; ++i)
        if (x[i] != 0) throw std::invalid_argument("point not in the weight lattice");
    return c;
}

LatticePolytope build_delta(const AdmissiblePair& pair, const Chart& chart) {
    const auto mi = pair.exponents();
    LatticePolytope p;
    for (int j = 0; j < 5; ++j) {
        Point5 x{-1, -1, -1, -1, -1};
        x[j] = mi[j] - 1;
        p.vertices.push_back(chart.to_chart(x));
    }
    // facet j: x_j >= -1, i.e. <row_j(B), c> >= -1
    for (int j = 0; j < 5; ++j) {
        Facet f;
        for (int t = 0; t < 4; ++t) f.n[t] = chart.basis[t][j];
        f.c = 1;
        long long g = 0;
        for (long long v : f.n) g = gcd_ll(g, v);
        if (g != 1)
            throw std::logic_error("chart facet normal is not primitive for " + pair.str());
        p.facets.push_back(f);
    }
    return p;
}

namespace {

// generalized cross product: n orthogonal to d1,d2,d3 in Z^4
Point4 cross4(const Point4& a, const Point4& b, const Point4& c) {
    auto det3 = [](I128 a0, I128 a1, I128 a2, I128 b0, I128 b1, I128 b2,
                   I128 c0, I128 c1, I128 c2) -> I128 {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
    };
    Point4 n;
    n[0] = checked_ll(det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]));
    n[1] = checked_ll(-det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]));
    n[2] = checked_ll(det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]));
    n[3] = checked_ll(-det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]));
    return n;
}

}  // namespace

std::vector<Facet> facets_from_vertices(const std::vector<Point4>& vertices) {
    const size_t n = vertices.size();
    if (n < 5) throw std::invalid_argument("not a full-dimensional polytope");
    std::set<std::pair<Point4, long long>> seen;
    std::vector<Facet> out;
    for (size_t i0 = 0; i0 < n; ++i0)
        for (size_t i1 = i0 + 1; i1 < n; ++i1)
            for (size_t i2 = i1 + 1; i2 < n; ++i2)
                for (size_t i3 = i2 + 1; i3 < n; ++i3) {
                    Point4 d1, d2, d3;
                    for (int k = 0; k < 4; ++k) {
                        d1[k] = vertices[i1][k] - vertices[i0][k];
                        d2[k] = vertices[i2][k] - vertices[i0][k];
                        d3[k] = vertices[i3][k] - vertices[i0][k];
                    }
                    Point4 nrm = cross4(d1, d2, d3);
                    if (nrm == Point4{0, 0, 0, 0}) continue;
                    long long g = 0;
                    for (long long v : nrm) g = gcd_ll(g, v);
                    for (long long& v : nrm) v /= g;
                    I128 level = 0;
                    for (int k = 0; k < 4; ++k) level += I128(nrm[k]) * vertices[i0][k];
                    bool lo = true, hi = true;
                    for (const Point4& v : vertices) {
                        I128 s = 0;
                        for (int k = 0; k < 4; ++k) s += I128(nrm[k]) * v[k];
                        if (s < level) lo = false;
                        if (s > level) hi = false;
                    }
                    if (!lo && !hi) continue;
                    if (hi) {   // flip so all vertices are on the >= side
                        for (long long& v : nrm) v = -v;
                        level = -level;
                    }
                    if (level >= 0) continue;   // origin must be strictly inside
                    Facet f;
                    f.n = nrm;
                    f.c = checked_ll(-level);
                    if (seen.insert({f.n, f.c}).second) out.push_back(f);
                }
    return out;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
    LatticePolytope d;
    const std::vector<Facet> facets =
        p.facets.empty() ? facets_from_vertices(p.vertices) : p.facets;
    for (const Facet& f : facets) {
        Point4 y;
        for (int k = 0; k < 4; ++k) {
            if (f.n[k] % f.c != 0)
                throw std::domain_error("polar dual has a non-integral vertex (not reflexive)");
            y[k] = f.n[k] / f.c;
        }
        d.vertices.push_back(y);
    }
    std::sort(d.vertices.begin(), d.vertices.end());
    for (const Point4& v : p.vertices) {
        Facet f;
        f.n = v;
        long long g = 0;
        for (long long w : f.n) g = gcd_ll(g, w);
        // vertex inequalities <v, y> >= -1 define the dual exactly
        f.c = 1;
        if (g != 1) { /* keep unreduced normal; level stays -1 */ }
        d.facets.push_back(f);
    }
    return d;
}

bool is_reflexive(const LatticePolytope& p) {
    const std::vector<Facet> facets =
        p.facets.empty() ? facets_from_vertices(p.vertices) : p.facets;
    for (const Facet& f : facets)
        if (f.c != 1) return false;
    return true;
}

std::vector<Point4> lattice_points(const LatticePolytope& p) {
    Point4 lo = p.vertices.front(), hi = p.vertices.front();
    for (const Point4& v : p.vertices)
        for (int k = 0; k < 4; ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    const std::vector<Facet>& facets = p.facets;
    if (facets.empty()) throw std::invalid_argument("polytope needs facets for membership");
    std::vector<Point4> out;
    Point4 x = lo;
    while (true) {
        bool inside = true;
        for (const Facet& f : facets) {
            I128 s = 0;
            for (int k = 0; k < 4; ++k) s += I128(f.n[k]) * x[k];
            if (s < -I128(f.c)) { inside = false; break; }
        }
        if (inside) out.push_back(x);
        int pos = 3;
        while (pos >= 0) {
            if (++x[pos] <= hi[pos]) break;
            x[pos] = lo[pos];
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

/* ---------------------------------------------------------------- */
/* structural route                                                 */

namespace {

// all v >= 0 with sum q_i v_i = m
std::vector<std::array<long long, 5>> degree_m_exponents(const AdmissiblePair& pair) {
    std::vector<std::array<long long, 5>> out;
    std::array<long long, 5> v{};
    std::function<void(int, long)> rec = [&](int pos, long rem) {
        if (pos == 4) {
            if (rem % pair.q[4] == 0) {
                v[4] = rem / pair.q[4];
                out.push_back(v);
            }
            return;
        }
        for (long long t = 0; t * pair.q[pos] <= rem; ++t) {
            v[pos] = t;
            rec(pos + 1, rem - t * pair.q[pos]);
        }
    };
    rec(0, pair.m);
    return out;
}

struct DualSolver {
    // rows: chart coordinates of four delta vertices, invertible
    std::array<Point4, 4> rows;
    std::array<int, 4> which;       // vertex indices used
    Point4 spare_vertex;            // the fifth, for consistency checks
    int spare_index;
    I128 det = 0;

    static I128 det4(const std::array<Point4, 4>& m) {
        I128 total = 0;
        // cofactor expansion along the first row
        for (int c0 = 0; c0 < 4; ++c0) {
            int cols[3], w = 0;
            for (int c = 0; c < 4; ++c)
                if (c != c0) cols[w++] = c;
            I128 d3 = 0;
            d3 += I128(m[1][cols[0]]) * (I128(m[2][cols[1]]) * m[3][cols[2]] - I128(m[2][cols[2]]) * m[3][cols[1]]);
            d3 -= I128(m[1][cols[1]]) * (I128(m[2][cols[0]]) * m[3][cols[2]] - I128(m[2][cols[2]]) * m[3][cols[0]]);
            d3 += I128(m[1][cols[2]]) * (I128(m[2][cols[0]]) * m[3][cols[1]] - I128(m[2][cols[1]]) * m[3][cols[0]]);
            total += ((c0 % 2) ? -1 : 1) * I128(m[0][c0]) * d3;
        }
        return total;
    }

    explicit DualSolver(const std::vector<Point4>& verts) {
        bool found = false;
        for (int skip = 0; skip < 5 && !found; ++skip) {
            std::array<Point4, 4> mrows{};
            std::array<int, 4> wh{};
            int w = 0;
            for (int j = 0; j < 5; ++j)
                if (j != skip) { mrows[w] = verts[j]; wh[w] = j; ++w; }
            I128 d = det4(mrows);
            if (d != 0) {
                rows = mrows;
                which = wh;
                spare_vertex = verts[skip];
                spare_index = skip;
                det = d;
                found = true;
            }
        }
        if (!found) throw std::logic_error("delta vertices degenerate");
    }

    // solve <y, rows[j]> = rhs[j]; returns false unless y is integral and
    // consistent with the spare vertex equation
    bool solve(const std::array<long long, 4>& rhs, long long spare_rhs, Point4* y) const {
        Point4 sol;
        for (int col = 0; col < 4; ++col) {
            std::array<Point4, 4> m = rows;
            for (int j = 0; j < 4; ++j) m[j][col] = rhs[j];
            // Cramer via transposed system: we need y with rows * y = rhs,
            // so substitute rhs into column col of the matrix
            I128 num = det4(m);
            if (num % det != 0) return false;
            sol[col] = checked_ll(num / det);
        }
        I128 check = 0;
        for (int k = 0; k < 4; ++k) check += I128(sol[k]) * spare_vertex[k];
        if (check != spare_rhs) return false;
        *y = sol;
        return true;
    }
};

}  // namespace

PolytopeCombinatorics polytope_combinatorics(const AdmissiblePair& pair) {
    Chart chart = make_chart(pair);
    LatticePolytope delta = build_delta(pair, chart);

    PolytopeCombinatorics pc;
    pc.reflexive = is_reflexive(delta);

    // Delta side: monomials v of degree m, point x = v - 1
    auto vs = degree_m_exponents(pair);
    pc.delta_monomials = vs;
    pc.l_delta = (long)vs.size();
    std::map<int, long long> v_support_count;   // bitmask of nonzero coords -> count
    for (const auto& v : vs) {
        Point5 x;
        int mask = 0;
        for (int i = 0; i < 5; ++i) {
            x[i] = v[i] - 1;
            if (v[i] != 0) mask |= 1 << i;
        }
        pc.delta_points.push_back(chart.to_chart(x));
        v_support_count[mask]++;
    }

    // dual side: u of degree m whose dual vector is integral
    DualSolver solver(delta.vertices);
    std::map<int, long long> u_support_count;
    for (const auto& u : degree_m_exponents(pair)) {
        std::array<long long, 4> rhs;
        for (int j = 0; j < 4; ++j) rhs[j] = u[solver.which[j]] - 1;
        Point4 y;
        if (!solver.solve(rhs, u[solver.spare_index] - 1, &y)) continue;
        pc.dual_points.push_back(y);
        int mask = 0;
        for (int i = 0; i < 5; ++i)
            if (u[i] != 0) mask |= 1 << i;
        u_support_count[mask]++;
    }
    pc.l_dual = (long)pc.dual_points.size();

    auto popcount = [](int m) { return __builtin_popcount((unsigned)m); };
    long long facet_interior_v = 0, facet_interior_u = 0;
    long long codim2_v = 0, codim2_u = 0;
    for (int mask = 1; mask < 32; ++mask) {
        long long cv = v_support_count.count(mask) ? v_support_count[mask] : 0;
        long long cu = u_support_count.count(mask) ? u_support_count[mask] : 0;
        int comp = (~mask) & 31;
        long long cu_comp = u_support_count.count(comp) ? u_support_count[comp] : 0;
        long long cv_comp = v_support_count.count(comp) ? v_support_count[comp] : 0;
        if (popcount(mask) == 4) {
            facet_interior_v += cv;
            facet_interior_u += cu;
        } else if (popcount(mask) == 3) {
            codim2_v += cv * cu_comp;    // l'(codim-2 face of Delta) * l'(dual edge)
            codim2_u += cu * cv_comp;
        }
    }
    pc.codim2_correction_delta = codim2_v;
    pc.codim2_correction_dual = codim2_u;
    pc.h21 = (long)(pc.l_delta - 5 - facet_interior_v + codim2_v);
    pc.h11 = (long)(pc.l_dual - 5 - facet_interior_u + codim2_u);
    return pc;
}

/*
   The shared-origin statement is about interior points: each polytope of a
   reflexive pair has the origin as its unique interior lattice point, and the
   origin is the one point the two interiors share.  (The closed polytopes
   overlap in more points; for the quintic the dual simplex lies wholly inside
   Delta, so a closed intersection would not be a chart-free invariant.)
*/
std::vector<Point4> origin_intersection(const AdmissiblePair& pair) {
    Chart chart = make_chart(pair);
    LatticePolytope delta = build_delta(pair, chart);
    PolytopeCombinatorics pc = polytope_combinatorics(pair);

    std::set<Point4> interior_delta;
    for (const auto& v : pc.delta_monomials) {
        bool full = true;
        for (int i = 0; i < 5; ++i)
            if (v[i] == 0) { full = false; break; }
        if (!full) continue;
        Point5 x;
        for (int i = 0; i < 5; ++i) x[i] = v[i] - 1;
        interior_delta.insert(chart.to_chart(x));
    }

    // interior points of the dual: all five vertex pairings strictly above -1
    std::set<Point4> interior_dual;
    for (const Point4& y : pc.dual_points) {
        bool strict = true;
        for (const Point4& vert : delta.vertices) {
            I128 s = 0;
            for (int k = 0; k < 4; ++k) s += I128(vert[k]) * y[k];
            if (s == -1) { strict = false; break; }
        }
        if (strict) interior_dual.insert(y);
    }

    std::vector<Point4> out;
    for (const Point4& y : interior_dual)
        if (interior_delta.count(y)) out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<long, long> batyrev_hodge(const AdmissiblePair& pair) {
    PolytopeCombinatorics pc = polytope_combinatorics(pair);
    if (!pc.reflexive) throw std::domain_error("polytope not reflexive");
    return {pc.h11, pc.h21};
}

}  // namespace motiveforge
