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

#include "motiveforge/arith.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

namespace motiveforge {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long mod_pow(long base, long exp, long mod) {
    long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = (long)((__int128)result * base % mod);
        base = (long)((__int128)base * base % mod);
        exp >>= 1;
    }
    return result;
}

long mod_inverse(long a, long mod) {
    long t = 0, nt = 1, r = mod, nr = ((a % mod) + mod) % mod;
    while (nr != 0) {
        long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((t % mod) + mod) % mod;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long euler_phi(long n) {
    long result = n;
    for (long d : prime_factors(n)) result = result / d * (d - 1);
    return result;
}

/* ---------------------------------------------------------------- */
/* cyclotomic polynomials                                           */

namespace {

// exact division of polynomials over Z (divisor monic up to sign of lead)
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    const Int& lead = den.back();
    for (long i = (long)quot.size() - 1; i >= 0; --i) {
        Int q = num[i + den.size() - 1] / lead;
        quot[i] = q;
        if (q != 0)
            for (size_t j = 0; j < den.size(); ++j)
                num[i + j] -= q * den[j];
    }
    for (const Int& v : num)
        if (v != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by all Phi_d, d | m, d < m
    std::vector<Int> poly(m + 1, Int(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        poly = poly_divide_exact(poly, cyclotomic_polynomial(d));
    }
    cache[m] = poly;
    return poly;
}

/* ---------------------------------------------------------------- */
/* Cyclotomic                                                       */

Cyclotomic::Cyclotomic(long m) : m_(m), coeffs_(euler_phi(m), Int(0)) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
}

Cyclotomic Cyclotomic::integer(long m, const Int& v) {
    Cyclotomic z(m);
    z.coeffs_[0] = v;
    return z;
}

Cyclotomic Cyclotomic::zeta_pow(long m, long e) {
    e %= m;
    if (e < 0) e += m;
    std::vector<Int> poly(e + 1, Int(0));
    poly[e] = 1;
    return from_exponent_poly(m, poly);
}

Cyclotomic Cyclotomic::from_exponent_poly(long m, const std::vector<Int>& counts) {
    Cyclotomic z(m);
    std::vector<Int> poly = counts;
    z.reduce_(poly);
    return z;
}

void Cyclotomic::reduce_(std::vector<Int>& poly) {
    const long phi = (long)coeffs_.size();
    // fold exponents >= m first (zeta^m = 1), cheap and keeps division small
    if ((long)poly.size() > m_) {
        std::vector<Int> folded(m_, Int(0));
        for (size_t e = 0; e < poly.size(); ++e)
            if (poly[e] != 0) folded[e % m_] += poly[e];
        poly.swap(folded);
    }
    const std::vector<Int> phi_m = cyclotomic_polynomial(m_);
    for (long i = (long)poly.size() - 1; i >= phi; --i) {
        if (poly[i] == 0) continue;
        Int q = poly[i];
        for (long j = 0; j <= phi; ++j)
            poly[i - phi + j] -= q * phi_m[j];
    }
    for (long i = 0; i < phi; ++i)
        coeffs_[i] = (i < (long)poly.size()) ? poly[i] : Int(0);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (m_ != o.m_) throw std::invalid_argument("conductor mismatch");
    Cyclotomic z(m_);
    for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (m_ != o.m_) throw std::invalid_argument("conductor mismatch");
    Cyclotomic z(m_);
    for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return z;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z(m_);
    for (size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = -coeffs_[i];
    return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (m_ != o.m_) throw std::invalid_argument("conductor mismatch");
    const long n = (long)coeffs_.size();
    std::vector<Int> conv(2 * n - 1, Int(0));
    for (long i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    Cyclotomic z(m_);
    z.reduce_(conv);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const Int& v : coeffs_)
        if (v != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Int Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long t) const {
    t %= m_;
    if (t < 0) t += m_;
    if (std::gcd(t, m_) != 1) throw std::invalid_argument("galois index not coprime");
    std::vector<Int> poly(m_, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) poly[(i * t) % m_] += coeffs_[i];
    return from_exponent_poly(m_, poly);
}

std::complex<double> Cyclotomic::embed(long t) const {
    if (std::gcd(((t % m_) + m_) % m_, m_) != 1 && m_ > 1)
        throw std::invalid_argument("embedding index not coprime to conductor");
    std::complex<double> z(0.0, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double arg = 2.0 * M_PI * double((i * t) % m_) / double(m_);
        z += coeffs_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

/* ---------------------------------------------------------------- */
/* FiniteField                                                      */

namespace {

// polynomial (low-digit encoding) helpers over F_p for modulus search
std::vector<long> decode_poly(long code, long p, long r) {
    std::vector<long> c(r + 1, 0);
    for (long i = 0; i < r; ++i) { c[i] = code % p; code /= p; }
    c[r] = 1;  // monic
    return c;
}

std::vector<long> polymod_mul(const std::vector<long>& a, const std::vector<long>& b,
                              const std::vector<long>& mod, long p) {
    std::vector<long> conv(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            conv[i + j] = (conv[i + j] + a[i] * b[j]) % p;
    }
    const long r = (long)mod.size() - 1;
    for (long i = (long)conv.size() - 1; i >= r; --i) {
        long f = conv[i];
        if (!f) continue;
        for (long j = 0; j <= r; ++j)
            conv[i - r + j] = ((conv[i - r + j] - f * mod[j]) % p + p) % p;
    }
    conv.resize(r);
    return conv;
}

std::vector<long> polymod_pow(std::vector<long> base, Int e, const std::vector<long>& mod, long p) {
    std::vector<long> result((size_t)mod.size() - 1, 0);
    result[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = polymod_mul(result, base, mod, p);
        base = polymod_mul(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

std::vector<long> poly_gcd_fp(std::vector<long> a, std::vector<long> b, long p) {
    auto deg = [](const std::vector<long>& v) {
        for (long i = (long)v.size() - 1; i >= 0; --i)
            if (v[i]) return i;
        return -1L;
    };
    while (deg(b) >= 0) {
        long db = deg(b), da = deg(a);
        if (da < db) { std::swap(a, b); continue; }
        long f = (a[da] * mod_inverse(b[db], p)) % p;
        for (long j = 0; j <= db; ++j)
            a[da - db + j] = ((a[da - db + j] - f * b[j]) % p + p) % p;
    }
    return a;
}

bool is_irreducible(const std::vector<long>& f, long p, long r) {
    std::vector<long> x(r, 0);
    if (r == 1) return true;
    x[1] = 1;
    Int q = 1;
    for (long i = 0; i < r; ++i) q *= p;
    // x^{p^r} == x mod f
    std::vector<long> fr = polymod_pow(x, q, f, p);
    if (fr != x) return false;
    for (long ell : prime_factors(r)) {
        Int qs = 1;
        for (long i = 0; i < r / ell; ++i) qs *= p;
        std::vector<long> g = polymod_pow(x, qs, f, p);
        // gcd(x^{p^{r/ell}} - x, f) must be constant
        std::vector<long> diff(g);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        std::vector<long> d = poly_gcd_fp(f, diff, p);
        long dd = -1;
        for (long i = (long)d.size() - 1; i >= 0; --i)
            if (d[i]) { dd = i; break; }
        if (dd > 0) return false;
    }
    return true;
}

}  // namespace

FiniteField FiniteField::build(long p, long r) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    double qd = std::pow((double)p, (double)r);
    if (qd > 2.0e6) throw std::invalid_argument("field too large for table budget");

    FiniteField F;
    F.p_ = p;
    F.r_ = r;
    F.q_ = 1;
    for (long i = 0; i < r; ++i) F.q_ *= p;

    if (r > 1) {
        long code = 0;
        for (;; ++code) {
            if (code >= F.q_) throw std::logic_error("no irreducible found");
            std::vector<long> f = decode_poly(code, p, r);
            if (is_irreducible(f, p, r)) { F.modulus_ = f; break; }
        }
    }

    // smallest generator of the multiplicative group
    std::vector<long> qfac = prime_factors(F.q_ - 1);
    for (long g = 2; g < F.q_; ++g) {
        bool ok = true;
        for (long ell : qfac)
            if (F.pow(g, (F.q_ - 1) / ell) == 1) { ok = false; break; }
        if (ok) { F.generator_ = g; break; }
    }
    if (F.generator_ == 0) throw std::logic_error("no generator found");

    F.exp_.assign(F.q_ - 1, 0);
    F.log_.assign(F.q_, -1);
    long cur = 1;
    for (long i = 0; i < F.q_ - 1; ++i) {
        F.exp_[i] = cur;
        if (F.log_[cur] != -1) throw std::logic_error("generator order too small");
        F.log_[cur] = i;
        cur = F.mul_poly_(cur, F.generator_);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");

    // absolute trace via linearity over the power basis
    F.trace_.assign(F.q_, 0);
    std::vector<long> basis_tr(r, 0);
    if (r == 1) {
        for (long x = 0; x < p; ++x) F.trace_[x] = x;
    } else {
        for (long j = 0; j < r; ++j) {
            // trace of x^j = sum_i (x^j)^{p^i} mod f, read off constant? no:
            // trace of an element is the coefficient trace; compute by summing
            // Frobenius images and checking the result is a constant.
            std::vector<long> xj(r, 0);
            xj[j] = 1;
            std::vector<long> acc(r, 0);
            std::vector<long> cur_pow = xj;
            for (long i = 0; i < r; ++i) {
                for (long k = 0; k < r; ++k) acc[k] = (acc[k] + cur_pow[k]) % p;
                cur_pow = polymod_pow(cur_pow, Int(p), F.modulus_, p);
            }
            for (long k = 1; k < r; ++k)
                if (acc[k] != 0) throw std::logic_error("trace not in prime field");
            basis_tr[j] = acc[0];
        }
        for (long x = 0; x < F.q_; ++x) {
            long code = x, t = 0;
            for (long j = 0; j < r; ++j) { t = (t + (code % p) * basis_tr[j]) % p; code /= p; }
            F.trace_[x] = t;
        }
    }
    return F;
}

long FiniteField::mul_poly_(long a, long b) const {
    if (r_ == 1) return (long)((__int128)a * b % p_);
    std::vector<long> va(r_, 0), vb(r_, 0);
    long ca = a, cb = b;
    for (long i = 0; i < r_; ++i) { va[i] = ca % p_; ca /= p_; vb[i] = cb % p_; cb /= p_; }
    std::vector<long> prod = polymod_mul(va, vb, modulus_, p_);
    long code = 0;
    for (long i = r_ - 1; i >= 0; --i) code = code * p_ + prod[i];
    return code;
}

long FiniteField::add(long a, long b) const {
    if (r_ == 1) return (a + b) % p_;
    long code = 0, mult = 1;
    for (long i = 0; i < r_; ++i) {
        code += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return code;
}

long FiniteField::neg(long a) const {
    if (r_ == 1) return (p_ - a) % p_;
    long code = 0, mult = 1;
    for (long i = 0; i < r_; ++i) {
        code += ((p_ - a % p_) % p_) * mult;
        a /= p_; mult *= p_;
    }
    return code;
}

long FiniteField::sub(long a, long b) const { return add(a, neg(b)); }

long FiniteField::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    return mul_poly_(a, b);
}

long FiniteField::pow(long a, long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) {
        long le = (long)(((__int128)log_[a] * (e % (q_ - 1))) % (q_ - 1));
        return exp_[le];
    }
    long result = 1;
    long base = a;
    while (e > 0) {
        if (e & 1) result = mul_poly_(result, base);
        base = mul_poly_(base, base);
        e >>= 1;
    }
    return result;
}

long FiniteField::inv(long a) const {
    if (a == 0) throw std::invalid_argument("division by zero in field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

long FiniteField::log(long a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    return log_[a];
}

long FiniteField::exp(long e) const {
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    return exp_[e];
}

long FiniteField::trace(long a) const { return trace_[a]; }

std::string FiniteField::describe_modulus() const {
    if (r_ == 1) return "prime field";
    std::ostringstream os;
    for (long i = r_; i >= 0; --i) {
        long c = modulus_[i];
        if (!c) continue;
        if (os.tellp() > 0) os << " + ";
        if (i == 0) os << c;
        else if (c == 1) os << "x^" << i;
        else os << c << "*x^" << i;
    }
    return os.str();
}

Cyclotomic char_value(const FiniteField& field, long m, long x, long a) {
    if ((field.q() - 1) % m != 0)
        throw std::invalid_argument("character order must divide q-1");
    if (x == 0) throw std::invalid_argument("character undefined at zero");
    return Cyclotomic::zeta_pow(m, (a % m) * (field.log(x) % m));
}

/* ---------------------------------------------------------------- */
/* IntPoly                                                          */

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c.empty() || o.c.empty()) return IntPoly();
    std::vector<Int> v(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

/* ---------------------------------------------------------------- */
/* FermatGroup / GroupRingInt                                       */

FermatGroup::FermatGroup(long m_) : m(m_), size(m_ * m_ * m_ * m_) {
    if (size > 2'000'000) throw std::invalid_argument("Fermat group too large for table budget");
    add_table.resize((size_t)size * size);
    for (long i = 0; i < size; ++i) {
        long di[4];
        long t = i;
        for (int k = 0; k < 4; ++k) { di[k] = t % m; t /= m; }
        int32_t* row = add_table.data() + (size_t)i * size;
        for (long j = 0; j < size; ++j) {
            long jj = j, idx = 0, pw = 1;
            for (int k = 0; k < 4; ++k) {
                long d = di[k] + jj % m;
                if (d >= m) d -= m;
                jj /= m;
                idx += d * pw;
                pw *= m;
            }
            row[j] = (int32_t)idx;
        }
    }
}

std::array<long, 5> FermatGroup::unpack(long idx) const {
    std::array<long, 5> e{0, 0, 0, 0, 0};
    for (int i = 1; i <= 4; ++i) { e[i] = idx % m; idx /= m; }
    return e;
}

long FermatGroup::pack(const std::array<long, 5>& e) const {
    // normalize first exponent to 0 by the diagonal action
    long shift = ((-e[0]) % m + m) % m;
    long idx = 0;
    for (int i = 4; i >= 1; --i) idx = idx * m + ((e[i] + shift) % m + m) % m;
    return idx;
}

GroupRingInt convolve(const GroupRingInt& a, const GroupRingInt& b) {
    const FermatGroup& G = *a.grp;
    if (b.grp->m != G.m) throw std::invalid_argument("group mismatch");
    GroupRingInt z(G);
    // both operands are normalized (first exponent 0), so composition is the
    // digitwise sum mod m, precomputed in the group table
    for (long i = 0; i < G.size; ++i) {
        long long ai = a.c[i];
        if (!ai) continue;
        const int32_t* row = G.add_table.data() + (size_t)i * G.size;
        const long long* bc = b.c.data();
        long long* zc = z.c.data();
        for (long j = 0; j < G.size; ++j)
            zc[row[j]] += ai * bc[j];
    }
    return z;
}

}  // namespace motiveforge
