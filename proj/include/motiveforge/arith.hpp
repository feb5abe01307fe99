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

#ifndef MOTIVEFORGE_ARITH_HPP
#define MOTIVEFORGE_ARITH_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace motiveforge {

using Int = mpz_class;

bool is_prime(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_pow(long base, long exp, long mod);
long mod_inverse(long a, long mod);
std::vector<long> prime_factors(long n);   // distinct primes
long euler_phi(long n);

// m-th cyclotomic polynomial, ascending coefficients, degree phi(m).
std::vector<Int> cyclotomic_polynomial(long m);

/*
   Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
   Every constructor and operation reduces mod Phi_m, so equality of
   coefficient vectors is equality in the ring.
*/
class Cyclotomic {
public:
    Cyclotomic() : m_(1), coeffs_(1, 0) {}
    explicit Cyclotomic(long m);                       // zero of conductor m
    static Cyclotomic integer(long m, const Int& v);
    static Cyclotomic zeta_pow(long m, long e);
    // polynomial sum_e counts[e] * zeta^e (counts indexed by exponent, any length)
    static Cyclotomic from_exponent_poly(long m, const std::vector<Int>& counts);

    long conductor() const { return m_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }
    bool operator==(const Cyclotomic& o) const { return m_ == o.m_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_rational() const;                 // lies in Z
    Int rational_part() const;                // requires is_rational()

    Cyclotomic galois(long t) const;          // zeta -> zeta^t, gcd(t,m)=1
    std::complex<double> embed(long t = 1) const;  // zeta -> e^{2 pi i t/m}

private:
    long m_;
    std::vector<Int> coeffs_;                 // size phi(m)
    void reduce_(std::vector<Int>& poly);     // in place mod Phi_m, then copy
};

/*
   F_{p^r} with a full discrete-log table.  Elements are encoded as
   integers in [0, q): the base-p digits are the coefficients of the
   residue polynomial (r = 1 is plain arithmetic mod p).

   Deterministic construction: for r > 1 the modulus is the monic
   irreducible of degree r whose low-coefficient encoding is smallest;
   the generator is the smallest encoded element of order q-1.
*/
class FiniteField {
public:
    static FiniteField build(long p, long r);

    long p() const { return p_; }
    long r() const { return r_; }
    long q() const { return q_; }
    long generator() const { return generator_; }
    const std::vector<long>& modulus() const { return modulus_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long pow(long a, long e) const;
    long inv(long a) const;

    long log(long a) const;                   // a != 0, base = generator
    long exp(long e) const;                   // generator^e, e mod q-1
    long trace(long a) const;                 // absolute trace, value in [0,p)

    std::string describe_modulus() const;

private:
    long p_ = 0, r_ = 0, q_ = 0, generator_ = 0;
    std::vector<long> modulus_;               // ascending, monic, empty for r=1
    std::vector<long> log_, exp_, trace_;
    long mul_poly_(long a, long b) const;     // table-free product
};

// chi(x)^a = zeta_m^{a * log_g(x) mod m} for the order-m character built on
// the field's generator; requires m | q-1 and x != 0
Cyclotomic char_value(const FiniteField& field, long m, long x, long a);

// Integer polynomials, ascending coefficients, normalized (no leading zeros).
struct IntPoly {
    std::vector<Int> c;

    IntPoly() : c{} {}
    explicit IntPoly(std::vector<Int> v) : c(std::move(v)) { normalize(); }
    static IntPoly one() { return IntPoly({Int(1)}); }

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
    Int coeff(long i) const { return (i >= 0 && i < (long)c.size()) ? c[i] : Int(0); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c == o.c; }
    std::string to_string(const std::string& var = "t") const;
};

/*
   The automorphism group (mu_m)^5 / diagonal of the Fermat quintic-type
   hypersurface; elements are exponent vectors with first component
   normalized to zero, indexed by the remaining four digits base m.
*/
struct FermatGroup {
    long m;
    long size;                                // m^4
    std::vector<int32_t> add_table;           // size x size composition table

    explicit FermatGroup(long m_);
    std::array<long, 5> unpack(long idx) const;
    long pack(const std::array<long, 5>& e) const;   // canonicalizes first to 0
};

// Group-ring element with integer coefficients, dense over FermatGroup.
struct GroupRingInt {
    const FermatGroup* grp;
    std::vector<long long> c;

    explicit GroupRingInt(const FermatGroup& g) : grp(&g), c(g.size, 0) {}
};

GroupRingInt convolve(const GroupRingInt& a, const GroupRingInt& b);

}  // namespace motiveforge

#endif
