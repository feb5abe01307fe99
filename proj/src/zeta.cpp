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

#include "motiveforge/zeta.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "motiveforge/mirror.hpp"

namespace motiveforge {

std::pair<long, long> factor_prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    for (long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        long r = 0, t = q;
        while (t % p == 0) { t /= p; ++r; }
        if (t != 1) throw std::invalid_argument("q is not a prime power");
        return {p, r};
    }
    return {q, 1};
}

/* ---------------------------------------------------------------- */
/* Jacobi character sums                                            */

namespace {

// field construction is deterministic, so tables may be keyed by q alone
struct FieldTables {
    std::vector<int> add;       // q*q
    std::vector<int> neg;       // q

    explicit FieldTables(const FiniteField& f) {
        const long q = f.q();
        add.resize(q * q);
        neg.resize(q);
        for (long a = 0; a < q; ++a) {
            neg[a] = (int)f.neg(a);
            for (long b = 0; b < q; ++b) add[a * q + b] = (int)f.add(a, b);
        }
    }
};

const FieldTables& get_tables(const FiniteField& field) {
    if (field.q() > 4096)
        throw std::invalid_argument("character-sum kernels bounded to q <= 4096");
    static std::map<long, FieldTables> cache;
    auto it = cache.find(field.q());
    if (it == cache.end()) it = cache.emplace(field.q(), FieldTables(field)).first;
    return it->second;
}

}  // namespace

Cyclotomic jacobi_charsum(const FiniteField& field, long m, const Character& a) {
    const long q = field.q();
    if ((q - 1) % m != 0)
        throw std::invalid_argument("character order does not divide q-1");
    const FieldTables& T = get_tables(field);

    // exponent of chi(x)^{a_i} is a_i * (log x mod m)
    std::vector<std::vector<int>> aw(4, std::vector<int>(q, 0));
    for (int i = 0; i < 4; ++i)
        for (long x = 1; x < q; ++x)
            aw[i][x] = (int)((a[i] % m) * (field.log(x) % m) % m);

    std::vector<long> counts(4 * m, 0);
    const long neg_one = field.neg(1);
    for (long x1 = 1; x1 < q; ++x1) {
        const int e1 = aw[0][x1];
        const long t1 = T.add[neg_one * q + T.neg[x1]];        // -1 - x1
        for (long x2 = 1; x2 < q; ++x2) {
            const int e12 = e1 + aw[1][x2];
            const long t12 = T.add[t1 * q + T.neg[x2]];        // -1 - x1 - x2
            const int* row = &T.add[t12 * q];
            for (long x3 = 1; x3 < q; ++x3) {
                const long x4 = row[T.neg[x3]];                // -1 - x1 - x2 - x3
                if (x4 == 0) continue;
                counts[e12 + aw[2][x3] + aw[3][x4]]++;
            }
        }
    }
    std::vector<Int> folded(m, Int(0));
    for (long e = 0; e < 4 * m; ++e)
        if (counts[e]) folded[e % m] += counts[e];
    return Cyclotomic::from_exponent_poly(m, folded);
}

/* ---------------------------------------------------------------- */
/* Gauss sums in Z[zeta_m, zeta_p]                                  */

TensorElt TensorElt::operator+(const TensorElt& o) const {
    TensorElt z(m, p);
    for (long j = 0; j < p - 1; ++j) z.comp[j] = comp[j] + o.comp[j];
    return z;
}

TensorElt TensorElt::operator*(const TensorElt& o) const {
    if (m != o.m || p != o.p) throw std::invalid_argument("tensor ring mismatch");
    std::vector<Cyclotomic> conv(2 * (p - 1) - 1, Cyclotomic(m));
    for (long i = 0; i < p - 1; ++i) {
        if (comp[i].is_zero()) continue;
        for (long j = 0; j < p - 1; ++j) {
            if (o.comp[j].is_zero()) continue;
            conv[i + j] += comp[i] * o.comp[j];
        }
    }
    // zeta_p^{p-1} = -(1 + zeta_p + ... + zeta_p^{p-2})
    for (long e = (long)conv.size() - 1; e >= p - 1; --e) {
        if (conv[e].is_zero()) continue;
        Cyclotomic carry = conv[e];
        conv[e] = Cyclotomic(m);
        for (long j = 0; j < p - 1; ++j) conv[e - (p - 1) + j] = conv[e - (p - 1) + j] - carry;
    }
    TensorElt z(m, p);
    for (long j = 0; j < p - 1; ++j) z.comp[j] = conv[j];
    return z;
}

bool TensorElt::zeta_p_free() const {
    for (long j = 1; j < p - 1; ++j)
        if (!comp[j].is_zero()) return false;
    return true;
}

Cyclotomic TensorElt::scalar() const {
    if (!zeta_p_free()) throw std::logic_error("tensor element has residual zeta_p part");
    return comp[0];
}

TensorElt gauss_sum(const FiniteField& field, long m, long k) {
    const long q = field.q(), p = field.p();
    if ((q - 1) % m != 0)
        throw std::invalid_argument("character order does not divide q-1");
    k %= m;
    if (k < 0) k += m;
    // counts[i][j]: multiplicity of zeta_m^i zeta_p^j
    std::vector<std::vector<long>> counts(m, std::vector<long>(p, 0));
    for (long x = 1; x < q; ++x)
        counts[(k * (field.log(x) % m)) % m][field.trace(x)]++;
    TensorElt g(m, p);
    for (long j = 0; j < p - 1; ++j) {
        std::vector<Int> poly(m, Int(0));
        for (long i = 0; i < m; ++i) poly[i] = counts[i][j] - counts[i][p - 1];
        g.comp[j] = Cyclotomic::from_exponent_poly(m, poly);
    }
    return g;
}

/* ---------------------------------------------------------------- */
/* slopes                                                           */

std::vector<std::pair<long, long>> newton_slopes(const IntPoly& poly, long q) {
    auto [p, f] = factor_prime_power(q);
    struct Pt { long i; long vp; };   // valuation of coefficient i (in powers of p)
    std::vector<Pt> pts;
    for (long i = 0; i <= poly.degree(); ++i) {
        Int c = poly.coeff(i);
        if (c == 0) continue;
        long v = 0;
        while (mpz_divisible_ui_p(c.get_mpz_t(), p)) { c /= p; ++v; }
        pts.push_back({i, v});
    }
    // lower convex hull from (0, v0) to (deg, vdeg)
    std::vector<Pt> hull;
    for (const Pt& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // keep b only if it is strictly below segment a-pt
            if ((long long)(b.vp - a.vp) * (pt.i - a.i) <= (long long)(pt.vp - a.vp) * (b.i - a.i))
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<std::pair<long, long>> slopes;
    for (size_t s = 1; s < hull.size(); ++s) {
        long di = hull[s].i - hull[s - 1].i;
        long dv = hull[s].vp - hull[s - 1].vp;
        long num = dv, den = di * f;          // normalize to q-valuation
        long g = std::gcd(std::abs(num), den);
        if (g == 0) g = 1;
        for (long t = 0; t < di; ++t) slopes.emplace_back(num / g, den / g);
    }
    std::sort(slopes.begin(), slopes.end(), [](auto& a, auto& b) {
        return (double)a.first / a.second < (double)b.first / b.second;
    });
    return slopes;
}

/* ---------------------------------------------------------------- */
/* cache                                                            */

std::string FactorCache::key(const AdmissiblePair& pair, long q, const Character& label) {
    std::ostringstream os;
    os << pair.m << ";";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << pair.q[i];
    os << ";" << q << ";";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << label[i];
    return os.str();
}

FactorCache::FactorCache(std::string dir) {
    file_ = dir + "/factors.cache";
    std::ifstream in(file_);
    if (in) {
        // a truncated final record must not swallow the next append
        in.seekg(0, std::ios::end);
        if (in.tellg() > 0) {
            in.seekg(-1, std::ios::end);
            if (in.peek() != '\n') needs_newline_ = true;
        }
        in.seekg(0, std::ios::beg);
        std::string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            // m;q1,..,q5;q;label;coeffs
            std::vector<std::string> fields;
            std::stringstream ss(line);
            std::string fld;
            while (std::getline(ss, fld, ';')) fields.push_back(fld);
            if (fields.size() != 5) {
                std::cerr << "cache: skipping corrupt line " << lineno << "\n";
                continue;
            }
            try {
                std::vector<Int> coeffs;
                std::stringstream cs(fields[4]);
                std::string c;
                while (std::getline(cs, c, ',')) coeffs.emplace_back(c);
                std::string k = fields[0] + ";" + fields[1] + ";" + fields[2] + ";" + fields[3];
                entries_[k] = IntPoly(std::move(coeffs));
            } catch (const std::exception&) {
                std::cerr << "cache: skipping corrupt line " << lineno << "\n";
            }
        }
    } else {
        std::ofstream out(file_, std::ios::app);
        if (out) out << "# motiveforge-cache v1\n";
        else {
            std::cerr << "cache: directory not writable, proceeding uncached\n";
            writable_ = false;
        }
    }
}

std::optional<IntPoly> FactorCache::lookup(const AdmissiblePair& pair, long q,
                                           const Character& label) const {
    auto it = entries_.find(key(pair, q, label));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void FactorCache::store(const AdmissiblePair& pair, long q, const Character& label,
                        const IntPoly& poly) {
    if (!writable_) return;
    std::string k = key(pair, q, label);
    if (entries_.count(k)) return;
    entries_[k] = poly;
    std::ofstream out(file_, std::ios::app);
    if (!out) { std::cerr << "cache: append failed, proceeding uncached\n"; return; }
    if (needs_newline_) { out << "\n"; needs_newline_ = false; }
    out << k << ";";
    for (long i = 0; i <= poly.degree(); ++i)
        out << (i ? "," : "") << poly.coeff(i).get_str();
    out << "\n";
}

/* ---------------------------------------------------------------- */
/* local factors                                                    */

namespace {

std::map<long, FiniteField>& field_cache() {
    static std::map<long, FiniteField> cache;
    return cache;
}

const FiniteField& get_field(long q) {
    auto& cache = field_cache();
    auto it = cache.find(q);
    if (it == cache.end()) {
        auto [p, r] = factor_prime_power(q);
        it = cache.emplace(q, FiniteField::build(p, r)).first;
    }
    return it->second;
}

// expand prod_{a in orbit} (1 + S(a) t) from the orbit representative's
// character sum by Galois conjugation
IntPoly orbit_factor(const AdmissiblePair& pair, const std::vector<Character>& orbit, long q) {
    const FiniteField& F = get_field(q);
    const long m = pair.m;
    Cyclotomic s_rep = jacobi_charsum(F, m, orbit.front());

    std::vector<Cyclotomic> poly{Cyclotomic::integer(m, 1)};
    for (const Character& b : orbit) {
        // b = t * rep for the t moving rep[0] to b[0] (all entries move together)
        long t = -1;
        const Character& rep = orbit.front();
        for (long cand = 1; cand < m; ++cand) {
            if (std::gcd(cand, m) != 1) continue;
            bool match = true;
            for (int i = 0; i < 5; ++i)
                if ((rep[i] * cand) % m != b[i]) { match = false; break; }
            if (match) { t = cand; break; }
        }
        if (t < 0) throw std::logic_error("orbit member not a scalar multiple of the representative");
        // P_3 factors carry the reciprocal-root convention of the source
        // tables: the linear factor for a is (1 - S(a) t)
        Cyclotomic s = -s_rep.galois(t);
        std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(m));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * s;
        }
        poly.swap(next);
    }
    std::vector<Int> coeffs;
    for (const Cyclotomic& c : poly) {
        if (!c.is_rational())
            throw std::logic_error("local factor coefficient not a rational integer");
        coeffs.push_back(c.rational_part());
    }
    return IntPoly(std::move(coeffs));
}

// f = ord of p mod m; the regime of squares: f even with p^{f/2} = -1 mod m
bool supersingular_regime(const AdmissiblePair& pair, long p, long* f_out) {
    if (pair.m % p == 0) return false;
    long ord = 1, t = p % pair.m;
    if (t == 0) return false;
    while (t != 1) { t = (t * (p % pair.m)) % pair.m; ++ord; }
    if (ord % 2 != 0) return false;
    if (mod_pow(p, ord / 2, pair.m) != pair.m - 1) return false;
    *f_out = ord;
    return true;
}

}  // namespace

LocalFactor local_factor(const AdmissiblePair& pair, const Character& label, long q,
                         FactorCache* cache) {
    const long m = pair.m;
    auto motives = motive_orbits(pair);
    const MotiveOrbit* mo = find_motive(motives, pair, label);
    if (!mo) throw std::invalid_argument("label is not a motive of this pair");

    LocalFactor lf;
    lf.label = mo->label;
    lf.dim = mo->dim;
    lf.mult = mo->mult;

    if (cache) {
        auto hit = cache->lookup(pair, q, mo->label);
        if (hit) {
            lf.poly = *hit;
            lf.slopes = newton_slopes(lf.poly, q);
            return lf;
        }
    }

    long q_used = q;
    if ((q - 1) % m == 0) {
        lf.poly = orbit_factor(pair, mo->orbit, q);
    } else {
        // the supersingular shortcut: lift q = p^r to p^f for f = ord_m(p),
        // where every reciprocal root is q_eff^{3/2}
        auto [p, r] = factor_prime_power(q);
        long f = 0;
        if (!supersingular_regime(pair, p, &f) || (r != 1 && r != f))
            throw std::domain_error("q is neither 1 mod m nor in the supersingular regime");
        Int root = 1;
        for (long i = 0; i < 3 * f / 2; ++i) root *= p;
        q_used = 1;
        for (long i = 0; i < f; ++i) q_used *= p;
        IntPoly lin({Int(1), -root});
        IntPoly acc = IntPoly::one();
        for (long i = 0; i < lf.dim; ++i) acc = acc * lin;
        lf.poly = acc;
    }
    lf.slopes = newton_slopes(lf.poly, q_used);
    if (cache) cache->store(pair, q_used, mo->label, lf.poly);
    return lf;
}

std::vector<LocalFactor> all_local_factors(const AdmissiblePair& pair, long q,
                                           FactorCache* cache) {
    std::vector<LocalFactor> out;
    for (const MotiveOrbit& mo : motive_orbits(pair))
        out.push_back(local_factor(pair, mo.label, q, cache));
    return out;
}

IntPoly full_p3(const AdmissiblePair& pair, long q, FactorCache* cache) {
    IntPoly acc = IntPoly::one();
    for (const LocalFactor& lf : all_local_factors(pair, q, cache))
        for (long i = 0; i < lf.mult; ++i) acc = acc * lf.poly;
    return acc;
}

IntPoly mirror_factor(const AdmissiblePair& pair, long q, FactorCache* cache) {
    IntPoly acc = IntPoly::one();
    for (const MotiveOrbit& mo : invariant_motives(pair))
        acc = acc * local_factor(pair, mo.label, q, cache).poly;
    return acc;
}

IntPoly dwork_constant_class_factor(const AdmissiblePair& pair, long q) {
    const FiniteField& F = get_field(q);
    auto classes = classify(pair);
    const MonomialClass* c0 = constant_class(classes);
    if (!c0) throw std::logic_error("constant class missing");
    const long m = pair.m;
    std::vector<Cyclotomic> poly{Cyclotomic::integer(m, 1)};
    for (const Exponents& v : c0->members) {
        bool zero_free = true;
        for (int i = 0; i < 5; ++i)
            if (v[i] == 0) { zero_free = false; break; }
        if (!zero_free) continue;
        Character a;
        for (int i = 0; i < 5; ++i) a[i] = (pair.q[i] * v[i]) % m;
        Cyclotomic s = -jacobi_charsum(F, m, a);
        std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(m));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * s;
        }
        poly.swap(next);
    }
    std::vector<Int> coeffs;
    for (const Cyclotomic& c : poly) {
        if (!c.is_rational())
            throw std::logic_error("constant-class factor not rational");
        coeffs.push_back(c.rational_part());
    }
    return IntPoly(std::move(coeffs));
}

std::vector<ClassGroupFactor> class_group_factors(const AdmissiblePair& pair, long q) {
    const FiniteField& F = get_field(q);
    const long m = pair.m;
    if ((q - 1) % m != 0)
        throw std::invalid_argument("class factors need m | q-1");
    auto classes = classify(pair);
    std::map<int, std::vector<const MonomialClass*>> groups;
    for (const MonomialClass& c : classes) groups[c.group_id].push_back(&c);

    std::vector<ClassGroupFactor> out;
    for (auto& [gid, members] : groups) {
        ClassGroupFactor rec;
        rec.group_id = gid;
        std::vector<Cyclotomic> poly{Cyclotomic::integer(m, 1)};
        for (const MonomialClass* c : members) {
            rec.class_reps.push_back(c->rep);
            for (const Exponents& v : c->members) {
                bool zero_free = true;
                for (int i = 0; i < 5; ++i)
                    if (v[i] == 0) { zero_free = false; break; }
                if (!zero_free) continue;
                rec.zero_free++;
                Character a;
                for (int i = 0; i < 5; ++i) a[i] = (pair.q[i] * v[i]) % m;
                Cyclotomic s = -jacobi_charsum(F, m, a);
                std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(m));
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i] += poly[i];
                    next[i + 1] += poly[i] * s;
                }
                poly.swap(next);
            }
        }
        std::vector<Int> coeffs;
        for (const Cyclotomic& c : poly) {
            if (!c.is_rational())
                throw std::logic_error("class-group factor not rational");
            coeffs.push_back(c.rational_part());
        }
        rec.poly = IntPoly(std::move(coeffs));
        out.push_back(std::move(rec));
    }
    return out;
}

/* ---------------------------------------------------------------- */
/* point counts                                                     */

Int brute_force_affine(const AdmissiblePair& pair, long q) {
    if (q > 41) throw std::invalid_argument("brute force bounded to q <= 41");
    const FiniteField& F = get_field(q);
    const auto mi = pair.exponents();
    std::vector<std::vector<long>> pw(5, std::vector<long>(q));
    for (int i = 0; i < 5; ++i)
        for (long x = 0; x < q; ++x) pw[i][x] = F.pow(x, mi[i]);

    std::vector<long> hits(q, 0);          // #{x5 : x5^{m_5} = v}
    for (long x = 0; x < q; ++x) hits[pw[4][x]]++;

    const FieldTables& T = get_tables(F);
    long long count = 0;
    for (long x1 = 0; x1 < q; ++x1) {
        long s1 = pw[0][x1];
        for (long x2 = 0; x2 < q; ++x2) {
            long s2 = T.add[s1 * q + pw[1][x2]];
            for (long x3 = 0; x3 < q; ++x3) {
                long s3 = T.add[s2 * q + pw[2][x3]];
                const int* row = &T.add[s3 * q];
                for (long x4 = 0; x4 < q; ++x4)
                    count += hits[T.neg[row[pw[3][x4]]]];
            }
        }
    }
    return Int((long)count);
}

Int weil_charsum(const AdmissiblePair& pair, const FiniteField& field) {
    const long m = pair.m;
    if ((field.q() - 1) % m != 0)
        throw std::invalid_argument("Weil route needs m | q-1");
    Cyclotomic total(m);
    for (const MotiveOrbit& mo : motive_orbits(pair)) {
        Cyclotomic s_rep = jacobi_charsum(field, m, mo.orbit.front());
        Cyclotomic orbit_sum(m);
        const Character& rep = mo.orbit.front();
        for (const Character& b : mo.orbit) {
            long t = -1;
            for (long cand = 1; cand < m; ++cand) {
                if (std::gcd(cand, m) != 1) continue;
                bool match = true;
                for (int i = 0; i < 5; ++i)
                    if ((rep[i] * cand) % m != b[i]) { match = false; break; }
                if (match) { t = cand; break; }
            }
            orbit_sum += s_rep.galois(t);
        }
        // permutation-sibling orbits have equal sums: S(a) is symmetric in the
        // five slots because the defining x-sum is
        for (long i = 0; i < mo.mult; ++i) total += orbit_sum;
    }
    if (!total.is_rational()) throw std::logic_error("Galois-stable sum not rational");
    return total.rational_part();
}

namespace {

struct GaussTable {
    std::vector<TensorElt> g;   // index k mod D
    explicit GaussTable(const FiniteField& F, long D) : g(D, TensorElt(D, F.p())) {
        for (long k = 0; k < D; ++k) g[k] = gauss_sum(F, D, k);
    }
};

}  // namespace

Int dwork_charsum(const AdmissiblePair& pair, const FiniteField& field) {
    const long q = field.q();
    const auto mi = pair.exponents();
    std::array<long, 5> d;
    for (int i = 0; i < 5; ++i) d[i] = std::gcd(mi[i], q - 1);
    long D = 1;
    for (long v : d) D = lcm_long(D, v);
    // characters chi_i = chi_D^{k_i}, k_i in (D/d_i)*[1, d_i), sum k_i = 0 mod D
    GaussTable G(field, D);
    TensorElt total(D, field.p());
    std::array<long, 5> k{};
    std::function<void(int, long)> rec = [&](int pos, long sum) {
        if (pos == 4) {
            long need = ((-sum) % D + D) % D;
            if (need == 0 || need % (D / d[4]) != 0) return;
            k[4] = need;
            TensorElt prod = G.g[(D - k[0]) % D];
            for (int i = 1; i < 5; ++i) prod = prod * G.g[(D - k[i]) % D];
            total = total + prod;
            return;
        }
        for (long j = 1; j < d[pos]; ++j) {
            k[pos] = j * (D / d[pos]);
            rec(pos + 1, sum + k[pos]);
        }
    };
    rec(0, 0);
    if (D == 1) return Int(0);
    Cyclotomic s = total.scalar();
    if (!s.is_rational()) throw std::logic_error("Dwork sum not rational");
    Int val = s.rational_part();
    if (val % q != 0) throw std::logic_error("Dwork sum not divisible by q");
    return val / q;
}

Int dwork_charsum_grouped(const AdmissiblePair& pair, const FiniteField& field) {
    const long q = field.q(), m = pair.m;
    if ((q - 1) % m != 0)
        throw std::invalid_argument("grouped route needs m | q-1");
    GaussTable G(field, m);
    TensorElt total(m, field.p());

    const auto mi = pair.exponents();
    MirrorGroup GH = build_ghat(pair);
    std::vector<Exponents> gens;
    for (const Exponents& w : invariant_monomials(pair, GH)) {
        int support = 0;
        for (int i = 0; i < 5; ++i) support += (w[i] % mi[i]) != 0;
        if (support > 0) gens.push_back(w);
    }

    for (const MonomialClass& cls : classify(pair)) {
        // one addition orbit, weighted by the number of merged orbits
        std::set<Exponents> orbit{cls.rep};
        std::vector<Exponents> stack{cls.rep};
        while (!stack.empty()) {
            Exponents cur = stack.back();
            stack.pop_back();
            for (const Exponents& g : gens) {
                Exponents nx;
                for (int i = 0; i < 5; ++i) nx[i] = (cur[i] + g[i]) % mi[i];
                if (orbit.insert(nx).second) stack.push_back(nx);
            }
        }
        TensorElt class_sum(m, field.p());
        bool any = false;
        for (const Exponents& v : orbit) {
            bool zero_free = true;
            for (int i = 0; i < 5; ++i)
                if (v[i] == 0) { zero_free = false; break; }
            if (!zero_free) continue;
            TensorElt prod = G.g[(m - (pair.q[0] * v[0]) % m) % m];
            for (int i = 1; i < 5; ++i)
                prod = prod * G.g[(m - (pair.q[i] * v[i]) % m) % m];
            class_sum = class_sum + prod;
            any = true;
        }
        if (!any) continue;
        for (long t = 0; t < cls.addition_orbits; ++t) total = total + class_sum;
    }
    Cyclotomic s = total.scalar();
    if (!s.is_rational()) throw std::logic_error("grouped Dwork sum not rational");
    Int val = s.rational_part();
    if (val % q != 0) throw std::logic_error("grouped Dwork sum not divisible by q");
    return val / q;
}

Int dwork_affine_count(const AdmissiblePair& pair, const FiniteField& field) {
    const long q = field.q(), p = field.p();
    const auto mi = pair.exponents();
    // q * N = sum_{y} prod_i S_i(y), S_i(y) = sum_x psi(y x^{m_i});
    // y = 0 contributes q^5, the rest is accumulated exactly in Z[zeta_p]
    Int q5 = 1;
    for (int i = 0; i < 5; ++i) q5 *= q;
    std::vector<Int> acc(p, Int(0));
    acc[0] = q5;
    for (long y = 1; y < q; ++y) {
        // S_i(y) as vectors of zeta_p-exponent counts
        std::array<std::vector<long>, 5> s;
        for (int i = 0; i < 5; ++i) {
            s[i].assign(p, 0);
            for (long x = 0; x < q; ++x)
                s[i][field.trace(field.mul(y, field.pow(x, mi[i])))]++;
        }
        // product of the five additive-character sums
        std::vector<Int> prod(p, Int(0));
        prod[0] = 1;
        for (int i = 0; i < 5; ++i) {
            std::vector<Int> next(p, Int(0));
            for (long e1 = 0; e1 < p; ++e1) {
                if (prod[e1] == 0) continue;
                for (long e2 = 0; e2 < p; ++e2) {
                    if (s[i][e2] == 0) continue;
                    next[(e1 + e2) % p] += prod[e1] * s[i][e2];
                }
            }
            prod.swap(next);
        }
        for (long e = 0; e < p; ++e) acc[e] += prod[e];
    }
    // reduce mod Phi_p: value must be rational, i.e. acc[1..] all equal
    for (long e = 2; e < p; ++e)
        if (acc[e] != acc[1]) throw std::logic_error("additive route not rational");
    Int val = acc[0] - acc[1];
    if (val % q != 0) throw std::logic_error("additive route not divisible by q");
    return val / q;
}

bool CountReport::routes_agree() const {
    if (weil_available && n_motive != n_mon) return false;
    if (n_brute_affine) {
        Int expect = Int(q) * Int(q) * Int(q) * Int(q) + Int(q - 1) * n_mon;
        if (*n_brute_affine != expect) return false;
    }
    if (n_dwork_affine && n_brute_affine && *n_dwork_affine != *n_brute_affine) return false;
    return true;
}

CountReport count_routes(const AdmissiblePair& pair, long q, bool run_brute) {
    const FiniteField& F = get_field(q);
    CountReport rep;
    rep.q = q;
    rep.weil_available = ((q - 1) % pair.m == 0);
    rep.n_mon = dwork_charsum(pair, F);
    if (rep.weil_available) rep.n_motive = weil_charsum(pair, F);
    Int qq(q);
    rep.n_weil_projective = 1 + qq + qq * qq + qq * qq * qq +
                            (rep.weil_available ? rep.n_motive : rep.n_mon);
    if (run_brute && q <= 41) {
        rep.n_brute_affine = brute_force_affine(pair, q);
        rep.n_dwork_affine = dwork_affine_count(pair, F);
    }
    return rep;
}

}  // namespace motiveforge
