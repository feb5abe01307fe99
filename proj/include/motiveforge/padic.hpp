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

#ifndef MOTIVEFORGE_PADIC_HPP
#define MOTIVEFORGE_PADIC_HPP

#include <vector>

#include "motiveforge/arith.hpp"

namespace motiveforge {

// residues mod p^K
struct PadicContext {
    long p;
    long K;
    Int modulus;    // p^K

    PadicContext(long p_, long K_);
    Int reduce(const Int& v) const;
    Int inv(const Int& v) const;      // unit inverse mod p^K
};

// the (p-1)-th root of unity congruent to x mod p
Int teichmuller(const PadicContext& ctx, long x);

// Gamma_p(n) = (-1)^n prod_{1 <= i < n, p !| i} i  (mod p^K)
Int gamma_p_int(const PadicContext& ctx, const Int& n);

// Gamma_p at the p-adic integer congruent to num/den mod p^K (p !| den)
Int gamma_p_rational(const PadicContext& ctx, long num, long den);

/*
   Z_p[pi] with pi^{p-1} = -p: coefficient vector over pi^0..pi^{p-2},
   entries mod p^K.  Valuations are measured in pi-units, v(p) = p-1.
*/
struct Eisenstein {
    const PadicContext* ctx;
    std::vector<Int> c;    // size p-1

    explicit Eisenstein(const PadicContext& cx) : ctx(&cx), c(cx.p - 1, Int(0)) {}
    Eisenstein operator+(const Eisenstein& o) const;
    Eisenstein operator-(const Eisenstein& o) const;
    Eisenstein operator*(const Eisenstein& o) const;
    bool is_zero() const;
    // min over i of i + (p-1)*ord_p(c_i); -1 for 0 (capped by working precision)
    long valuation() const;
    Eisenstein mul_pi_power(long e) const;    // multiply by pi^e, e >= 0
    bool divide_by_p();                        // false if some coefficient is not divisible
};

// coefficients of Dwork's splitting series exp(X + X^p/p), b_0..b_n,
// p-adically integral, returned mod p^K
std::vector<Int> dwork_series(const PadicContext& ctx, long nterms);

// G_n = sum_{x in F_p^*} Theta(x) omega^n(x), Theta(x) = F(pi omega(x)),
// evaluated to pi-precision M (series truncated per the valuation bound)
Eisenstein dwork_gauss(long n, long p, long M);

struct GrossKoblitzReport {
    long p = 0;
    long precision = 0;      // pi-adic digits compared
    int calibration = 0;     // frozen unit: G_n * pi^{S(n)} = calibration * p * Gamma_p(...)
    std::vector<long> checked_n;
    bool pass = false;
};

// r = 1 Gross-Koblitz: G_n = eps * p * pi^{-S(n)} * Gamma_p(1 - n/(p-1))
GrossKoblitzReport gross_koblitz_check(long p, long M);

}  // namespace motiveforge

#endif
