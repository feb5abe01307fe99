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

#ifndef MOTIVEFORGE_ZETA_HPP
#define MOTIVEFORGE_ZETA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motiveforge/arith.hpp"
#include "motiveforge/monomials.hpp"
#include "motiveforge/motives.hpp"
#include "motiveforge/weights.hpp"

namespace motiveforge {

// q = p^r with p prime, r >= 1
std::pair<long, long> factor_prime_power(long q);

/*
   S(a) = (1/(q-1)) * sum over (x_1..x_5) in (F_q^*)^5, sum x_i = 0, of
   prod chi(x_i)^{a_i}; evaluated directly with x_5 = 1 and x_4 solved.
   The Jacobi sum of the local factors is J(a) = -S(a), and
   P_3(M_A, t) = prod_{a in A} (1 - J(a) t) = prod (1 + S(a) t).
*/
Cyclotomic jacobi_charsum(const FiniteField& field, long m, const Character& a);

// Gauss sum G(chi^k, psi) = sum_{x != 0} chi(x)^k psi(x) in Z[zeta_m, zeta_p];
// the return value is the matrix of coefficients of zeta_m^i zeta_p^j with
// the zeta_p part reduced mod Phi_p (index j < p-1).
struct TensorElt {
    long m = 1, p = 2;
    std::vector<Cyclotomic> comp;   // coefficient of zeta_p^j, j = 0..p-2

    TensorElt() = default;
    TensorElt(long m_, long p_) : m(m_), p(p_), comp(p_ - 1, Cyclotomic(m_)) {}
    TensorElt operator*(const TensorElt& o) const;
    TensorElt operator+(const TensorElt& o) const;
    bool zeta_p_free() const;                  // comp[1..] all zero
    Cyclotomic scalar() const;                 // requires zeta_p_free()
};

TensorElt gauss_sum(const FiniteField& field, long m, long k);

struct LocalFactor {
    Character label{};
    long dim = 0;
    long mult = 0;
    IntPoly poly;                                    // in 1 + Z[t]
    std::vector<std::pair<long, long>> slopes;        // reduced fractions, sorted
};

// Newton slopes of the reciprocal roots at q = p^f
std::vector<std::pair<long, long>> newton_slopes(const IntPoly& poly, long q);

/*
   Append-only result cache, line format
       m;q1,q2,q3,q4,q5;q;label;c0,c1,...
   Corrupted lines are skipped with a warning.
*/
class FactorCache {
public:
    explicit FactorCache(std::string dir);
    std::optional<IntPoly> lookup(const AdmissiblePair& pair, long q, const Character& label) const;
    void store(const AdmissiblePair& pair, long q, const Character& label, const IntPoly& poly);
    const std::string& path() const { return file_; }
    bool writable() const { return writable_; }

private:
    std::string file_;
    bool writable_ = true;
    bool needs_newline_ = false;
    std::map<std::string, IntPoly> entries_;
    static std::string key(const AdmissiblePair& pair, long q, const Character& label);
};

// single motive factor; q must satisfy m | q-1 or the supersingular regime
LocalFactor local_factor(const AdmissiblePair& pair, const Character& label, long q,
                         FactorCache* cache = nullptr);

std::vector<LocalFactor> all_local_factors(const AdmissiblePair& pair, long q,
                                           FactorCache* cache = nullptr);

IntPoly full_p3(const AdmissiblePair& pair, long q, FactorCache* cache = nullptr);

// product over mirror-invariant motives
IntPoly mirror_factor(const AdmissiblePair& pair, long q, FactorCache* cache = nullptr);

// constant-class factor assembled from the monomial classification
IntPoly dwork_constant_class_factor(const AdmissiblePair& pair, long q);

/*
   Factors R([v], t) per class group: classes sharing a scalar orbit are
   assembled jointly (their separate products are not rational).  The
   product over all groups is the full P_3.
*/
struct ClassGroupFactor {
    int group_id = -1;
    std::vector<Exponents> class_reps;
    IntPoly poly;
    long zero_free = 0;
};

std::vector<ClassGroupFactor> class_group_factors(const AdmissiblePair& pair, long q);

// #{x in F_q^5 : sum x_i^{m_i} = 0}, loops bounded to q <= 41
Int brute_force_affine(const AdmissiblePair& pair, long q);

// Weil route: sum of S(a) over A(Q) (rationality asserted)
Int weil_charsum(const AdmissiblePair& pair, const FiniteField& field);

// Dwork route: (1/q) sum over character tuples of Gauss-sum products;
// handles m | q-1 and the degenerate branches uniformly
Int dwork_charsum(const AdmissiblePair& pair, const FiniteField& field);

// same value computed through the monomial classes (per-residue grouping)
Int dwork_charsum_grouped(const AdmissiblePair& pair, const FiniteField& field);

// affine count by the additive-character identity, any q coprime to m
Int dwork_affine_count(const AdmissiblePair& pair, const FiniteField& field);

struct CountReport {
    long q = 0;
    bool weil_available = false;  // order-m characters exist iff m | q-1
    Int n_motive;                 // Weil character-sum piece
    Int n_mon;                    // Dwork character-sum piece
    Int n_weil_projective;        // 1 + q + q^2 + q^3 + n_motive
    std::optional<Int> n_brute_affine;
    std::optional<Int> n_dwork_affine;
    bool routes_agree() const;    // n_motive == n_mon and affine reconciliations
};

CountReport count_routes(const AdmissiblePair& pair, long q, bool run_brute);

}  // namespace motiveforge

#endif
