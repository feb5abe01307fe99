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

#include "motiveforge/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "motiveforge/arith.hpp"

namespace motiveforge {

std::string AdmissiblePair::str() const {
    std::ostringstream os;
    os << "<" << m << ", (" << q[0];
    for (int i = 1; i < 5; ++i) os << "," << q[i];
    os << ")>";
    return os.str();
}

bool is_admissible(long m, const Weight& q, std::string* why) {
    for (long v : q)
        if (v <= 0) { if (why) *why = "weights must be positive"; return false; }
    if (m <= 0) { if (why) *why = "degree must be positive"; return false; }
    for (int drop = 0; drop < 5; ++drop) {
        long g = 0;
        for (int i = 0; i < 5; ++i)
            if (i != drop) g = std::gcd(g, q[i]);
        if (g != 1) { if (why) *why = "condition (1): a 4-subset of Q has gcd > 1"; return false; }
    }
    for (long v : q)
        if (m % v != 0) { if (why) *why = "condition (2): some q_j does not divide m"; return false; }
    if (q[0] + q[1] + q[2] + q[3] + q[4] != m) {
        if (why) *why = "condition (3): sum of weights differs from m";
        return false;
    }
    return true;
}

AdmissiblePair make_pair_checked(long m, const Weight& q_in) {
    Weight q = q_in;
    std::sort(q.begin(), q.end());
    std::string why;
    if (!is_admissible(m, q, &why))
        throw std::invalid_argument("inadmissible pair: " + why);
    return AdmissiblePair{m, q};
}

/*
   Condition (3) is sum 1/m_i = 1 for m_i = m/q_i, so admissible pairs come
   from 5-term unit-fraction decompositions of 1 with m = lcm(m_i).
*/
namespace {

void unit_fraction_search(int depth, long lo, long num, long den,
                          std::array<long, 5>& mi, std::set<AdmissiblePair>& out) {
    // remaining sum is num/den > 0
    if (depth == 4) {
        if (num > 0 && den % num == 0 && den / num >= lo) {
            mi[4] = den / num;
            long m = 1;
            for (long v : mi) m = lcm_long(m, v);
            Weight q;
            for (int i = 0; i < 5; ++i) q[i] = m / mi[i];
            std::sort(q.begin(), q.end());
            if (is_admissible(m, q)) out.insert(AdmissiblePair{m, q});
        }
        return;
    }
    int terms_left = 5 - depth;
    // need terms_left/v >= num/den  =>  v <= terms_left*den/num
    long hi = terms_left * den / num;
    for (long v = std::max(lo, den / num + (den % num ? 1 : 0)); v <= hi; ++v) {
        long nn = num * v - den;   // num/den - 1/v = (num*v - den) / (den*v)
        if (nn <= 0) continue;     // nothing may be left while terms remain
        long nd = den * v;
        long g = std::gcd(nn, nd);
        mi[depth] = v;
        unit_fraction_search(depth + 1, v, nn / g, nd / g, mi, out);
    }
    // also allow the remaining sum to be consumed exactly only at depth 4
}

}  // namespace

std::vector<AdmissiblePair> enumerate_admissible() {
    std::set<AdmissiblePair> out;
    std::array<long, 5> mi{};
    unit_fraction_search(0, 2, 1, 1, mi, out);
    return {out.begin(), out.end()};
}

bool has_printed_degree_discrepancy(const AdmissiblePair& pair) {
    return pair.m == 1806 && pair.q == Weight{1, 42, 258, 602, 903};
}

std::vector<SingularStratum> singular_strata(const AdmissiblePair& pair) {
    const auto mi = pair.exponents();
    std::set<std::vector<int>> seen;
    std::vector<SingularStratum> out;
    std::vector<long> counts;

    for (long ell = 1; ell < pair.m; ++ell) {
        std::vector<int> s;
        for (int j = 0; j < 5; ++j)
            if (ell % mi[j] == 0) s.push_back(j);
        if (s.empty()) continue;
        if (s.size() == 4)
            throw std::logic_error("stratum of size 4 cannot occur for admissible pairs");
        auto it = seen.find(s);
        if (it != seen.end()) {
            for (auto& rec : out)
                if (rec.in_s == s) { rec.ell_count++; break; }
            continue;
        }
        seen.insert(s);
        SingularStratum rec;
        rec.in_s = s;
        rec.ell_count = 1;
        long c = 0;
        for (int j : s) c = std::gcd(c, pair.q[j]);
        rec.c = c;
        if (s.size() == 3 && c >= 2) {
            rec.kind = StratumKind::Curve;
            rec.m_reduced = pair.m / c;
            for (int k = 0; k < 3; ++k) rec.q_reduced[k] = pair.q[s[k]] / c;
            rec.genus = curve_genus(rec.m_reduced, rec.q_reduced);
            rec.mult_mc = c - 1;
        } else if (s.size() == 2) {
            rec.kind = StratumKind::Point;
        } else {
            rec.kind = StratumKind::None;
        }
        out.push_back(rec);
    }
    return out;
}

long curve_genus(long m_reduced, const std::array<long, 3>& q_reduced) {
    long target = m_reduced - (q_reduced[0] + q_reduced[1] + q_reduced[2]);
    if (target < 0) return 0;
    // series product truncated at degree target
    std::vector<long> series(target + 1, 0);
    series[0] = 1;
    for (long a : q_reduced) {
        // multiply by 1/(1-t^a)
        for (long i = a; i <= target; ++i) series[i] += series[i - a];
    }
    // numerator (1 - t^{m'}) only matters at exponents >= m' > target
    return series[target];
}

ResolutionSummary vafa_summary(const AdmissiblePair& pair) {
    const long m = pair.m;
    const auto mi = pair.exponents();
    ResolutionSummary rs;
    rs.beta.assign(m, 0);

    std::vector<int> ssize(m, 0);
    std::vector<std::array<bool, 5>> in_s(m);
    for (long ell = 0; ell < m; ++ell) {
        int cnt = 0;
        for (int j = 0; j < 5; ++j) {
            bool b = (ell % mi[j] == 0);
            in_s[ell][j] = b;
            cnt += b;
        }
        ssize[ell] = cnt;
    }

    for (long ell = 0; ell < m; ++ell) {
        long long total = 0;
        for (long r = 0; r < m; ++r) {
            long long prod = 1;
            for (int j = 0; j < 5; ++j)
                if (in_s[ell][j] && in_s[r][j]) prod *= (1 - mi[j]);
            total += prod;
        }
        if (total % m != 0)
            throw std::logic_error("beta_ell not integral for " + pair.str());
        rs.beta[ell] = total / m;
    }

    rs.b3_y = -rs.beta[0];
    long long curve_beta = 0, small_beta = 0, chi = 0;
    for (long ell = 0; ell < m; ++ell) {
        chi += rs.beta[ell];
        if (ssize[ell] == 3) curve_beta += rs.beta[ell];
        if (ssize[ell] < 3) small_beta += rs.beta[ell];
    }
    rs.b3_x = rs.b3_y - curve_beta;
    rs.chi = chi;
    if (small_beta % 2 != 0)
        throw std::logic_error("h11 formula produced a half-integer");
    rs.h11 = -1 + small_beta / 2;
    rs.h21 = rs.h11 - rs.chi / 2;
    return rs;
}

}  // namespace motiveforge
