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

#include "motiveforge/padic.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace motiveforge {

PadicContext::PadicContext(long p_, long K_) : p(p_), K(K_) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (K < 1) throw std::invalid_argument("precision must be >= 1");
    modulus = 1;
    for (long i = 0; i < K; ++i) modulus *= p;
}

Int PadicContext::reduce(const Int& v) const {
    Int r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

Int PadicContext::inv(const Int& v) const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), reduce(v).get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::invalid_argument("not a unit mod p^K");
    return r;
}

Int teichmuller(const PadicContext& ctx, long x) {
    x %= ctx.p;
    if (x < 0) x += ctx.p;
    if (x == 0) throw std::invalid_argument("Teichmuller lift of zero");
    // y -> y^p converges to the root of unity congruent to x
    Int y = x;
    for (long i = 0; i < ctx.K + 1; ++i) {
        Int ny;
        mpz_powm_ui(ny.get_mpz_t(), y.get_mpz_t(), (unsigned long)ctx.p, ctx.modulus.get_mpz_t());
        if (ny == y) break;
        y = ny;
    }
    return y;
}

Int gamma_p_int(const PadicContext& ctx, const Int& n) {
    if (n < 1) throw std::invalid_argument("integer Gamma_p argument must be >= 1");
    // fast path when everything fits machine words
    if (ctx.modulus.fits_ulong_p() && n.fits_ulong_p()) {
        unsigned long mod = ctx.modulus.get_ui(), nn = n.get_ui(), p = (unsigned long)ctx.p;
        unsigned long long acc = 1;
        for (unsigned long i = 1; i < nn; ++i) {
            if (i % p == 0) continue;
            acc = (acc * (i % mod)) % mod;
        }
        Int r((unsigned long)acc);
        if (nn % 2 == 1) r = ctx.reduce(-r);
        return r;
    }
    Int acc = 1;
    for (Int i = 1; i < n; ++i) {
        if (i % ctx.p == 0) continue;
        acc = ctx.reduce(acc * i);
    }
    if (mpz_odd_p(n.get_mpz_t())) acc = ctx.reduce(-acc);
    return acc;
}

Int gamma_p_rational(const PadicContext& ctx, long num, long den) {
    if (den % ctx.p == 0) throw std::invalid_argument("denominator divisible by p");
    // the integer congruent to num/den mod p^K, then continuity
    Int target = ctx.reduce(Int(num) * ctx.inv(Int(den)));
    if (target == 0) target = ctx.modulus;   // Gamma_p(0) is not needed; shift by p^K
    return gamma_p_int(ctx, target);
}

/* ---------------------------------------------------------------- */
/* Eisenstein ring                                                  */

Eisenstein Eisenstein::operator+(const Eisenstein& o) const {
    Eisenstein z(*ctx);
    for (size_t i = 0; i < c.size(); ++i) z.c[i] = ctx->reduce(c[i] + o.c[i]);
    return z;
}

Eisenstein Eisenstein::operator-(const Eisenstein& o) const {
    Eisenstein z(*ctx);
    for (size_t i = 0; i < c.size(); ++i) z.c[i] = ctx->reduce(c[i] - o.c[i]);
    return z;
}

Eisenstein Eisenstein::operator*(const Eisenstein& o) const {
    const long n = ctx->p - 1;
    std::vector<Int> conv(2 * n - 1, Int(0));
    for (long i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (o.c[j] == 0) continue;
            conv[i + j] += c[i] * o.c[j];
        }
    }
    Eisenstein z(*ctx);
    // pi^{p-1} = -p
    for (long e = 2 * n - 2; e >= n; --e) {
        if (conv[e] == 0) continue;
        conv[e - n] -= Int(ctx->p) * conv[e];
        conv[e] = 0;
    }
    for (long i = 0; i < n; ++i) z.c[i] = ctx->reduce(conv[i]);
    return z;
}

bool Eisenstein::is_zero() const {
    for (const Int& v : c)
        if (v != 0) return false;
    return true;
}

long Eisenstein::valuation() const {
    const long n = ctx->p - 1;
    long best = -1;
    for (long i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        Int v = c[i];
        long ord = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), (unsigned long)ctx->p)) { v /= ctx->p; ++ord; }
        long val = i + n * ord;
        if (best < 0 || val < best) best = val;
    }
    return best;
}

Eisenstein Eisenstein::mul_pi_power(long e) const {
    Eisenstein z = *this;
    const long n = ctx->p - 1;
    for (long t = 0; t < e; ++t) {
        // multiply by pi: shift, with pi^{p-1} = -p
        Int top = z.c[n - 1];
        for (long i = n - 1; i > 0; --i) z.c[i] = z.c[i - 1];
        z.c[0] = ctx->reduce(-Int(ctx->p) * top);
    }
    return z;
}

bool Eisenstein::divide_by_p() {
    for (Int& v : c)
        if (!mpz_divisible_ui_p(v.get_mpz_t(), (unsigned long)ctx->p)) return false;
    for (Int& v : c) v /= ctx->p;
    return true;
}

/* ---------------------------------------------------------------- */
/* Dwork series and Gauss sums                                      */

std::vector<Int> dwork_series(const PadicContext& ctx, long nterms) {
    // b_0 = 1, k b_k = b_{k-1} + b_{k-p}; computed with exact rationals.
    // Valid only while the coefficients stay p-integral (small orders).
    std::vector<mpq_class> b(nterms + 1);
    b[0] = 1;
    for (long k = 1; k <= nterms; ++k) {
        mpq_class acc = b[k - 1];
        if (k >= ctx.p) acc += b[k - ctx.p];
        b[k] = acc / k;
    }
    std::vector<Int> out(nterms + 1);
    for (long k = 0; k <= nterms; ++k) {
        Int num = b[k].get_num(), den = b[k].get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)ctx.p))
            throw std::logic_error("Dwork series coefficient not p-integral at this order");
        out[k] = ctx.reduce(num * ctx.inv(den));
    }
    return out;
}

namespace {

struct SeriesTerm {
    long vp;     // p-valuation of b_k, negative beyond k ~ p^2
    Int unit;    // p-free part of b_k mod p^K
};

std::vector<SeriesTerm> dwork_series_split(const PadicContext& ctx, long nterms) {
    std::vector<mpq_class> b(nterms + 1);
    b[0] = 1;
    for (long k = 1; k <= nterms; ++k) {
        mpq_class acc = b[k - 1];
        if (k >= ctx.p) acc += b[k - ctx.p];
        b[k] = acc / k;
    }
    std::vector<SeriesTerm> out(nterms + 1);
    for (long k = 0; k <= nterms; ++k) {
        Int num = b[k].get_num(), den = b[k].get_den();
        long v = 0;
        if (num == 0) { out[k] = {0, Int(0)}; continue; }
        while (mpz_divisible_ui_p(num.get_mpz_t(), (unsigned long)ctx.p)) { num /= ctx.p; ++v; }
        while (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)ctx.p)) { den /= ctx.p; --v; }
        out[k] = {v, ctx.reduce(num * ctx.inv(den))};
    }
    return out;
}

}  // namespace

Eisenstein dwork_gauss(long n, long p, long M) {
    const long nn = p - 1;
    const long cut = M + 2 * nn;                // drop contributions past pi^cut
    const long K = cut / nn + 3;
    // ord_p(b_k pi^k) >= k(p-1)/p^2, so terms beyond kmax sit above the cut
    const long kmax = ((cut * p) / nn) * p / nn + p + 1;

    static std::map<std::pair<long, long>, std::pair<PadicContext, std::vector<SeriesTerm>>> cache;
    auto key = std::make_pair(p, K);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PadicContext cx(p, K);
        std::vector<SeriesTerm> series = dwork_series_split(cx, kmax);
        it = cache.emplace(key, std::make_pair(cx, std::move(series))).first;
    }
    const PadicContext& ctx = it->second.first;
    const std::vector<SeriesTerm>& b = it->second.second;

    // G_n = sum_x Theta(x) omega(x)^n, Theta(x) = sum_k b_k pi^k omega(x)^k;
    // p^v = (-1)^v pi^{v(p-1)} folds non-integral coefficients into pi shifts
    Eisenstein g(ctx);
    std::vector<Int> omega(p);
    for (long x = 1; x < p; ++x) omega[x] = teichmuller(ctx, x);
    for (long x = 1; x < p; ++x) {
        Int wn;   // omega(x)^n
        mpz_powm_ui(wn.get_mpz_t(), omega[x].get_mpz_t(),
                    (unsigned long)(((n % nn) + nn) % nn), ctx.modulus.get_mpz_t());
        Int wk = 1;
        for (long k = 0; k < (long)b.size(); ++k) {
            if (b[k].unit != 0) {
                long E = k + b[k].vp * nn;       // pi-exponent of the whole term
                if (E < 0) throw std::logic_error("Dwork term below valuation bound");
                if (E < cut) {
                    long slot = E % nn;
                    long extra = E / nn;
                    Int term = ctx.reduce(b[k].unit * wk * wn);
                    long flips = b[k].vp + extra;   // (-1)^v and (-p)^extra signs
                    if (((flips % 2) + 2) % 2 == 1) term = ctx.reduce(-term);
                    for (long t = 0; t < extra; ++t) term = ctx.reduce(term * ctx.p);
                    g.c[slot] = ctx.reduce(g.c[slot] + term);
                }
            }
            wk = ctx.reduce(wk * omega[x]);
        }
    }
    return g;
}

/* ---------------------------------------------------------------- */
/* Gross-Koblitz                                                    */

GrossKoblitzReport gross_koblitz_check(long p, long M) {
    GrossKoblitzReport rep;
    rep.p = p;
    rep.precision = M;
    const long nn = p - 1;
    const long K = M / nn + 3;
    PadicContext ctx(p, K);

    /*
       r = 1 form: G_n = eps * p * pi^{-S(n)} * Gamma_p(1 - n/(p-1)) with
       S(n) = n for 1 <= n <= p-2.  The unit eps is calibrated once at
       (p = 5, n = 1) and frozen below.
    */
    static const int kCalibration = 1;
    rep.calibration = kCalibration;

    bool all = true;
    for (long n = 1; n <= p - 2; ++n) {
        Eisenstein g = dwork_gauss(n, p, M);
        // left side times pi^{S(n)}: should be eps * p * Gamma value (pi-free)
        Eisenstein lhs = g.mul_pi_power(n);
        if (!lhs.divide_by_p()) { all = false; break; }
        // now lhs should equal eps*Gamma_p(1 - n/(p-1)) in the pi^0 slot
        Int gamma = gamma_p_rational(ctx, nn - n, nn);   // 1 - n/(p-1) = (p-1-n)/(p-1)
        Int expect = ctx.reduce(Int(kCalibration) * gamma);
        // certify the difference vanishes to pi^M: slot i needs
        // ceil((M-i)/(p-1)) p-adic digits
        bool ok = true;
        for (long i = 0; i < nn && ok; ++i) {
            long digits = (M - i + nn - 1) / nn;
            if (digits <= 0) continue;
            Int cmp_mod = 1;
            for (long t = 0; t < digits; ++t) cmp_mod *= p;
            Int diff = (i == 0) ? Int(lhs.c[0] - expect) : lhs.c[i];
            if (diff % cmp_mod != 0) ok = false;
        }
        if (!ok) { all = false; break; }
        rep.checked_n.push_back(n);
    }
    rep.pass = all;
    return rep;
}

}  // namespace motiveforge
