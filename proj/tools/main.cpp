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

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "motiveforge/mirror.hpp"
#include "motiveforge/monomials.hpp"
#include "motiveforge/motives.hpp"
#include "motiveforge/padic.hpp"
#include "motiveforge/polytopes.hpp"
#include "motiveforge/weights.hpp"
#include "motiveforge/zeta.hpp"

using json = nlohmann::json;
using namespace motiveforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct PairArgs {
    long m = 0;
    std::vector<long> q;
};

// validates through is_admissible; exits 2 with the violated condition
AdmissiblePair resolve_pair(const PairArgs& args) {
    if (args.q.size() != 5) {
        std::cerr << "error: expected five weights\n";
        std::exit(kExitUsage);
    }
    Weight w;
    std::copy(args.q.begin(), args.q.end(), w.begin());
    std::sort(w.begin(), w.end());
    std::string why;
    if (!is_admissible(args.m, w, &why)) {
        std::cerr << "error: inadmissible pair: " << why << "\n";
        std::exit(kExitUsage);
    }
    return AdmissiblePair{args.m, w};
}

void add_pair_options(CLI::App* cmd, PairArgs& args) {
    cmd->add_option("m", args.m, "degree m")->required();
    cmd->add_option("weights", args.q, "the five weights q1..q5")->required()->expected(5);
}

std::string label_plain(const Character& a) {
    std::ostringstream os;
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a[i];
    return os.str();
}

json label_json(const Character& a) {
    return json::array({a[0], a[1], a[2], a[3], a[4]});
}

json slopes_json(const std::vector<std::pair<long, long>>& slopes) {
    json arr = json::array();
    for (auto [n, d] : slopes)
        arr.push_back(d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d));
    return arr;
}

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
    return arr;
}

std::unique_ptr<FactorCache> open_cache(const std::string& flag) {
    std::string dir = flag;
    if (dir.empty()) {
        const char* env = std::getenv("MOTIVE_FORGE_CACHE");
        if (env) dir = env;
    }
    if (dir.empty()) return nullptr;
    return std::make_unique<FactorCache>(dir);
}

struct CheckRow {
    std::string name;
    std::string lhs, rhs;
    bool equal;
};

int emit_report(const std::string& title, const std::vector<CheckRow>& rows, bool as_json) {
    bool all = true;
    for (const auto& r : rows) all = all && r.equal;
    if (as_json) {
        json out{{"schema", 1}, {"report", title}, {"pass", all}};
        json checks = json::array();
        for (const auto& r : rows)
            checks.push_back({{"name", r.name}, {"route_a", r.lhs}, {"route_b", r.rhs},
                              {"equal", r.equal}});
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << (r.equal ? "  ok   " : "  FAIL ") << r.name << ": " << r.lhs
                      << (r.equal ? " == " : " != ") << r.rhs << "\n";
        std::cout << "overall: " << (all ? "pass" : "FAIL") << "\n";
    }
    return all ? kExitOk : kExitVerifyFail;
}

/* ------------------------------------------------------------------ */

int cmd_weights_list(const std::string& format) {
    auto pairs = enumerate_admissible();
    if (format == "json") {
        json out{{"schema", 1}, {"count", pairs.size()}};
        json arr = json::array();
        for (const auto& p : pairs) {
            json rec{{"m", p.m}, {"q", {p.q[0], p.q[1], p.q[2], p.q[3], p.q[4]}}};
            if (has_printed_degree_discrepancy(p))
                rec["note"] = "source table prints degree 1807; the weights force m = 1806";
            arr.push_back(rec);
        }
        out["pairs"] = arr;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "m,q1,q2,q3,q4,q5\n";
        for (const auto& p : pairs) {
            std::cout << p.m;
            for (long v : p.q) std::cout << "," << v;
            std::cout << "\n";
        }
    } else {
        for (const auto& p : pairs) {
            std::cout << std::setw(5) << p.m << "  (" << p.q[0];
            for (int i = 1; i < 5; ++i) std::cout << "," << p.q[i];
            std::cout << ")";
            if (has_printed_degree_discrepancy(p))
                std::cout << "   # printed as 1807 in the source table";
            std::cout << "\n";
        }
        std::cout << "total: " << pairs.size() << "\n";
    }
    return kExitOk;
}

int cmd_weights_summary(const AdmissiblePair& pair, bool as_json) {
    auto vs = vafa_summary(pair);
    auto strata = singular_strata(pair);
    if (as_json) {
        json out{{"schema", 1},
                 {"m", pair.m},
                 {"q", {pair.q[0], pair.q[1], pair.q[2], pair.q[3], pair.q[4]}},
                 {"B3_Y", vs.b3_y},
                 {"B3_X", vs.b3_x},
                 {"chi", vs.chi},
                 {"h11", vs.h11},
                 {"h21", vs.h21}};
        json st = json::array();
        for (const auto& s : strata) {
            json rec{{"S", s.in_s}, {"c", s.c}, {"ell_count", s.ell_count}};
            rec["kind"] = s.kind == StratumKind::Curve   ? "curve"
                          : s.kind == StratumKind::Point ? "point"
                                                         : "none";
            if (s.kind == StratumKind::Curve) {
                rec["m_reduced"] = s.m_reduced;
                rec["q_reduced"] = {s.q_reduced[0], s.q_reduced[1], s.q_reduced[2]};
                rec["genus"] = s.genus;
                rec["mult"] = s.mult_mc;
            }
            st.push_back(rec);
        }
        out["strata"] = st;
        if (has_printed_degree_discrepancy(pair))
            out["note"] = "source table prints degree 1807; the weights force m = 1806";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << pair.str() << "\n"
                  << "  B3(Y) = " << vs.b3_y << "  B3(X) = " << vs.b3_x << "  chi = " << vs.chi
                  << "  h11 = " << vs.h11 << "  h21 = " << vs.h21 << "\n";
        for (const auto& s : strata) {
            if (s.kind == StratumKind::Curve)
                std::cout << "  curve stratum: m' = " << s.m_reduced << " genus " << s.genus
                          << " mult " << s.mult_mc << "\n";
            else if (s.kind == StratumKind::Point)
                std::cout << "  point stratum: |S| = " << s.in_s.size() << " (" << s.ell_count
                          << " values of l)\n";
        }
    }
    return kExitOk;
}

int cmd_motives_table(const AdmissiblePair& pair, bool as_json) {
    auto motives = motive_orbits(pair);
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"count", motives.size()}};
        json arr = json::array();
        for (const auto& mo : motives)
            arr.push_back({{"label", label_json(mo.label)},
                           {"dim", mo.dim},
                           {"mult", mo.mult},
                           {"h30", mo.hodge[0]},
                           {"h21", mo.hodge[1]},
                           {"h21_total", mo.hodge[1] * mo.mult},
                           {"sum_B3", mo.dim * mo.mult}});
        out["motives"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "A               dim  mult  h30  h21  sum B3\n";
        for (const auto& mo : motives)
            std::cout << "[" << std::setw(11) << label_plain(mo.label) << "] " << std::setw(3)
                      << mo.dim << " " << std::setw(5) << mo.mult << " " << std::setw(4)
                      << mo.hodge[0] << " " << std::setw(4) << mo.hodge[1] << " " << std::setw(6)
                      << mo.dim * mo.mult << "\n";
    }
    return kExitOk;
}

int cmd_mirror_invariants(const AdmissiblePair& pair, bool as_json) {
    auto inv = invariant_motives(pair);
    long sum = 0;
    for (const auto& mo : inv) sum += mo.dim;
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"sum_B3", sum}};
        json arr = json::array();
        for (const auto& mo : inv)
            arr.push_back({{"label", label_json(mo.label)}, {"dim", mo.dim}});
        out["invariant_motives"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& mo : inv)
            std::cout << "[" << label_plain(mo.label) << "]  dim " << mo.dim << "\n";
        std::cout << "sum B3 = " << sum << "\n";
    }
    return kExitOk;
}

int cmd_mirror_group(const AdmissiblePair& pair, bool as_json) {
    MirrorGroup g = build_ghat(pair);
    if (as_json) {
        json out{{"schema", 1},
                 {"m", pair.m},
                 {"order", g.order},
                 {"elementary_divisors", g.elementary_divisors},
                 {"duality_product", g.order * pair.weight_product()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "order " << g.order << " = m^3/prod(q) = "
                  << pair.m * pair.m * pair.m / pair.weight_product() << "\n"
                  << "structure: ";
        if (g.elementary_divisors.empty()) std::cout << "trivial";
        for (size_t i = 0; i < g.elementary_divisors.size(); ++i)
            std::cout << (i ? " x " : "") << "Z/" << g.elementary_divisors[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_monomials_classify(const AdmissiblePair& pair, bool as_json) {
    auto classes = classify(pair);
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"count", classes.size()}};
        json arr = json::array();
        for (const auto& c : classes) {
            json rec{{"rep", {c.rep[0], c.rep[1], c.rep[2], c.rep[3], c.rep[4]}},
                     {"degree", monomial_degree(pair, c.rep)},
                     {"mult", c.addition_orbits},
                     {"orbit_length", c.orbit_length},
                     {"zero_free", c.zero_free},
                     {"conifold_only", c.conifold_only},
                     {"group", c.group_id}};
            json labels = json::array();
            for (const auto& lab : c.motive_labels) labels.push_back(label_json(lab));
            rec["motives"] = labels;
            arr.push_back(rec);
        }
        out["classes"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "monomial      deg  mult  length  zero-free\n";
        for (const auto& c : classes) {
            std::cout << "(" << c.rep[0];
            for (int i = 1; i < 5; ++i) std::cout << "," << c.rep[i];
            std::cout << ")  " << std::setw(3) << monomial_degree(pair, c.rep) << " "
                      << std::setw(5) << c.addition_orbits << " " << std::setw(6)
                      << c.orbit_length << " " << std::setw(9) << c.zero_free
                      << (c.conifold_only ? "   conifold-only" : "") << "\n";
        }
    }
    return kExitOk;
}

int cmd_monomials_correspond(const AdmissiblePair& pair, bool as_json) {
    auto classes = classify(pair);
    auto motives = motive_orbits(pair);
    json arr = json::array();
    if (!as_json) std::cout << "monomial      lambda  ->  motive (dim, mult)\n";
    for (const auto& c : classes) {
        json rec{{"rep", {c.rep[0], c.rep[1], c.rep[2], c.rep[3], c.rep[4]}},
                 {"lambda", c.addition_orbits},
                 {"group", c.group_id}};
        if (!as_json) {
            std::cout << "(" << c.rep[0];
            for (int i = 1; i < 5; ++i) std::cout << "," << c.rep[i];
            std::cout << ")  " << std::setw(5) << c.addition_orbits << "   ";
        }
        if (c.conifold_only) {
            rec["motives"] = "conifold-only";
            if (!as_json) std::cout << "?  (conifold point only)";
        } else {
            json labels = json::array();
            for (const auto& lab : c.motive_labels) {
                const MotiveOrbit* mo = find_motive(motives, pair, lab);
                labels.push_back({{"label", label_json(lab)},
                                  {"dim", mo ? mo->dim : 0},
                                  {"mult", mo ? mo->mult : 0}});
                if (!as_json && mo)
                    std::cout << "[" << label_plain(lab) << "] (" << mo->dim << ", " << mo->mult
                              << ")  ";
            }
            rec["motives"] = labels;
        }
        if (!as_json) std::cout << "\n";
        arr.push_back(rec);
    }
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"rows", arr}};
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_polytope_info(const AdmissiblePair& pair, bool as_json) {
    Chart chart = make_chart(pair);
    LatticePolytope delta = build_delta(pair, chart);
    PolytopeCombinatorics pc = polytope_combinatorics(pair);
    if (as_json) {
        json verts = json::array();
        for (const auto& v : delta.vertices) verts.push_back({v[0], v[1], v[2], v[3]});
        json dual_pts = json::array();
        for (const auto& v : pc.dual_points) dual_pts.push_back({v[0], v[1], v[2], v[3]});
        json out{{"schema", 1},
                 {"m", pair.m},
                 {"vertices", verts},
                 {"reflexive", pc.reflexive},
                 {"l_delta", pc.l_delta},
                 {"l_dual", pc.l_dual},
                 {"dual_points", dual_pts},
                 {"origin_intersection", origin_intersection(pair).size()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "vertices:";
        for (const auto& v : delta.vertices) {
            std::cout << " (" << v[0];
            for (int k = 1; k < 4; ++k) std::cout << "," << v[k];
            std::cout << ")";
        }
        std::cout << "\nreflexive: " << (pc.reflexive ? "yes" : "no") << "  l(Delta) = "
                  << pc.l_delta << "  l(Delta*) = " << pc.l_dual << "\n";
    }
    return kExitOk;
}

int cmd_polytope_hodge(const AdmissiblePair& pair, bool as_json) {
    auto [h11, h21] = batyrev_hodge(pair);
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"h11", h11}, {"h21", h21}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "h11 = " << h11 << "  h21 = " << h21 << "\n";
    }
    return kExitOk;
}

int cmd_zeta_factors(const AdmissiblePair& pair, long q, bool as_json, FactorCache* cache) {
    auto factors = all_local_factors(pair, q, cache);
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"q", q}};
        json arr = json::array();
        for (const auto& lf : factors)
            arr.push_back({{"label", label_json(lf.label)},
                           {"dim", lf.dim},
                           {"mult", lf.mult},
                           {"poly", poly_json(lf.poly)},
                           {"slopes", slopes_json(lf.slopes)}});
        out["factors"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& lf : factors) {
            std::cout << "[" << label_plain(lf.label) << "]^" << lf.mult << " : "
                      << lf.poly.to_string() << "   slopes";
            for (auto [n, d] : lf.slopes) {
                std::cout << " " << n;
                if (d != 1) std::cout << "/" << d;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_zeta_count(const AdmissiblePair& pair, long q, const std::string& routes, bool as_json) {
    bool want_brute = routes.find("brute") != std::string::npos;
    auto rep = count_routes(pair, q, want_brute);
    if (as_json) {
        json out{{"schema", 1},
                 {"m", pair.m},
                 {"q", q},
                 {"weil_available", rep.weil_available},
                 {"N_motive", rep.n_motive.get_str()},
                 {"N_mon", rep.n_mon.get_str()},
                 {"N_weil_projective", rep.n_weil_projective.get_str()},
                 {"agree", rep.routes_agree()}};
        if (rep.n_brute_affine) out["N_brute_affine"] = rep.n_brute_affine->get_str();
        if (rep.n_dwork_affine) out["N_dwork_affine"] = rep.n_dwork_affine->get_str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "N_motive = " << rep.n_motive.get_str() << "\nN_mon    = "
                  << rep.n_mon.get_str() << "\nprojective count = "
                  << rep.n_weil_projective.get_str() << "\n";
        if (rep.n_brute_affine)
            std::cout << "affine (brute) = " << rep.n_brute_affine->get_str() << "\n";
        if (rep.n_dwork_affine)
            std::cout << "affine (Dwork) = " << rep.n_dwork_affine->get_str() << "\n";
        std::cout << "routes agree: " << (rep.routes_agree() ? "yes" : "NO") << "\n";
    }
    return rep.routes_agree() ? kExitOk : kExitVerifyFail;
}

int cmd_zeta_mirror(const AdmissiblePair& pair, long q, bool as_json, FactorCache* cache) {
    IntPoly mf = mirror_factor(pair, q, cache);
    if (as_json) {
        json out{{"schema", 1}, {"m", pair.m}, {"q", q}, {"degree", mf.degree()},
                 {"poly", poly_json(mf)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mirror zeta factor (degree " << mf.degree() << "):\n  " << mf.to_string()
                  << "\n";
    }
    return kExitOk;
}

std::vector<CheckRow> verify_pair(const AdmissiblePair& pair, long q) {
    std::vector<CheckRow> rows;
    auto add = [&](const std::string& name, const std::string& a, const std::string& b) {
        rows.push_back({name, a, b, a == b});
    };

    auto vs = vafa_summary(pair);
    auto agg = aggregate(pair);
    add("Vafa B3 = motivic B3", std::to_string(vs.b3_x), std::to_string(agg.b3_x));
    add("Vafa h21 = motivic h21", std::to_string(vs.h21), std::to_string(agg.h21_x));
    auto [h11, h21] = batyrev_hodge(pair);
    add("Batyrev h11 = Vafa h11", std::to_string(h11), std::to_string(vs.h11));
    add("Batyrev h21 = Vafa h21", std::to_string(h21), std::to_string(vs.h21));
    add("origin-only interior intersection", std::to_string(origin_intersection(pair).size()),
        "1");
    MirrorGroup g = build_ghat(pair);
    add("duality #G x #Ghat = m^3", std::to_string(g.order * pair.weight_product()),
        std::to_string(pair.m * pair.m * pair.m));

    long zero_free = 0;
    auto classes = classify(pair);
    for (const auto& c : classes) zero_free += c.zero_free;
    add("class zero-free members = B3(Y)", std::to_string(zero_free), std::to_string(agg.b3_y));

    if (q > 1 && (q - 1) % pair.m == 0) {
        auto rep = count_routes(pair, q, q <= 41);
        add("N_motive = N_mon", rep.n_motive.get_str(), rep.n_mon.get_str());
        if (rep.n_brute_affine) {
            Int qq(q);
            Int expect = qq * qq * qq * qq + (qq - 1) * rep.n_mon;
            add("brute affine = q^4 + (q-1) N", rep.n_brute_affine->get_str(), expect.get_str());
            add("additive-route affine = brute", rep.n_dwork_affine->get_str(),
                rep.n_brute_affine->get_str());
        }
        auto [p, r] = factor_prime_power(q);
        FiniteField f = FiniteField::build(p, r);
        add("grouped Dwork sum = N_mon", dwork_charsum_grouped(pair, f).get_str(),
            rep.n_mon.get_str());

        IntPoly mf = mirror_factor(pair, q);
        IntPoly r0 = dwork_constant_class_factor(pair, q);
        add("mirror factor = R([0],t)", mf.to_string(), r0.to_string());
        long inv_b3 = 0;
        for (const auto& mo : invariant_motives(pair)) inv_b3 += mo.dim;
        add("deg mirror factor = sum inv B3", std::to_string(mf.degree()),
            std::to_string(inv_b3));

        IntPoly full = full_p3(pair, q);
        IntPoly prod = IntPoly::one();
        for (const auto& gf : class_group_factors(pair, q)) prod = prod * gf.poly;
        CheckRow row{"class factors multiply to P3", "product", "P3(X,t)", prod == full};
        rows.push_back(row);
        add("deg P3 = B3(Y)", std::to_string(full.degree()), std::to_string(agg.b3_y));
    }
    return rows;
}

int cmd_verify_all(std::optional<PairArgs> pair_args, long q, bool as_json) {
    std::vector<std::pair<AdmissiblePair, long>> jobs;
    if (pair_args) {
        jobs.emplace_back(resolve_pair(*pair_args), q);
    } else {
        jobs.emplace_back(make_pair_checked(5, {1, 1, 1, 1, 1}), 11);
        jobs.emplace_back(make_pair_checked(8, {1, 1, 2, 2, 2}), 17);
        jobs.emplace_back(make_pair_checked(6, {1, 1, 1, 1, 2}), 7);
        jobs.emplace_back(make_pair_checked(10, {1, 1, 1, 2, 5}), 11);
    }
    std::vector<CheckRow> all_rows;
    for (const auto& [pair, qq] : jobs) {
        if (!as_json) std::cout << pair.str() << " at q = " << qq << "\n";
        auto rows = verify_pair(pair, qq);
        for (auto& r : rows) {
            if (!as_json)
                std::cout << (r.equal ? "  ok   " : "  FAIL ") << r.name << "\n";
            r.name = pair.str() + " q=" + std::to_string(qq) + ": " + r.name;
            all_rows.push_back(r);
        }
    }
    bool pass = true;
    for (const auto& r : all_rows) pass = pass && r.equal;
    if (as_json) return emit_report("verify-all", all_rows, true);
    std::cout << "overall: " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kExitOk : kExitVerifyFail;
}

int cmd_padic_gk(long p, long prec, bool as_json) {
    auto rep = gross_koblitz_check(p, prec);
    if (as_json) {
        json out{{"schema", 1},
                 {"p", p},
                 {"pi_precision", rep.precision},
                 {"calibration", rep.calibration},
                 {"checked_n", rep.checked_n},
                 {"pass", rep.pass}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "p = " << p << "  pi-precision " << rep.precision
                  << "  calibration unit = " << rep.calibration << "\n";
        for (long n : rep.checked_n) std::cout << "  n = " << n << "  ok\n";
        std::cout << (rep.pass ? "pass" : "FAIL") << "\n";
    }
    return rep.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"motiveforge: exact arithmetic of weighted Fermat Calabi-Yau threefolds"};
    app.require_subcommand(1);

    std::string format = "table";
    bool as_json = false;
    std::string cache_dir;
    long q_arg = 0;
    long prec = 20;
    std::string routes = "weil,dwork,brute";

    auto* weights = app.add_subcommand("weights", "admissible pairs and resolution data");
    weights->require_subcommand(1);
    auto* wl = weights->add_subcommand("list", "all admissible pairs");
    wl->add_option("--format", format, "table|csv|json");
    wl->add_flag("--json", as_json, "shortcut for --format json");
    PairArgs wc_args;
    auto* wc = weights->add_subcommand("check", "test admissibility");
    add_pair_options(wc, wc_args);
    PairArgs ws_args;
    auto* ws = weights->add_subcommand("summary", "Betti and Hodge data");
    add_pair_options(ws, ws_args);
    ws->add_flag("--json", as_json);

    auto* motives = app.add_subcommand("motives", "Fermat motive tables");
    motives->require_subcommand(1);
    PairArgs mt_args;
    auto* mt = motives->add_subcommand("table", "motive orbit table");
    add_pair_options(mt, mt_args);
    mt->add_flag("--json", as_json);

    auto* mirror = app.add_subcommand("mirror", "mirror symmetry group data");
    mirror->require_subcommand(1);
    PairArgs mi_args, mg_args;
    auto* mi = mirror->add_subcommand("invariants", "mirror-invariant motives");
    add_pair_options(mi, mi_args);
    mi->add_flag("--json", as_json);
    auto* mg = mirror->add_subcommand("group", "order and structure");
    add_pair_options(mg, mg_args);
    mg->add_flag("--json", as_json);

    auto* monomials = app.add_subcommand("monomials", "monomial classes");
    monomials->require_subcommand(1);
    PairArgs mc_args, mr_args;
    auto* mc = monomials->add_subcommand("classify", "class table");
    add_pair_options(mc, mc_args);
    mc->add_flag("--json", as_json);
    auto* mr = monomials->add_subcommand("correspond", "class-to-motive table");
    add_pair_options(mr, mr_args);
    mr->add_flag("--json", as_json);

    auto* polytope = app.add_subcommand("polytope", "reflexive polytope data");
    polytope->require_subcommand(1);
    PairArgs pi_args, ph_args;
    auto* pi = polytope->add_subcommand("info", "vertices and point counts");
    add_pair_options(pi, pi_args);
    pi->add_flag("--json", as_json);
    auto* ph = polytope->add_subcommand("hodge", "Batyrev Hodge numbers");
    add_pair_options(ph, ph_args);
    ph->add_flag("--json", as_json);

    auto* zeta = app.add_subcommand("zeta", "local zeta data over F_q");
    zeta->require_subcommand(1);
    PairArgs zf_args, zc_args, zm_args, zv_args;
    auto* zf = zeta->add_subcommand("factors", "motivic local factors");
    add_pair_options(zf, zf_args);
    zf->add_option("--q", q_arg, "prime power q")->required();
    zf->add_flag("--json", as_json);
    zf->add_option("--cache", cache_dir, "cache directory");
    auto* zc = zeta->add_subcommand("count", "point counts by all routes");
    add_pair_options(zc, zc_args);
    zc->add_option("--q", q_arg)->required();
    zc->add_option("--routes", routes, "comma list of weil,dwork,brute");
    zc->add_flag("--json", as_json);
    auto* zm = zeta->add_subcommand("mirror", "mirror zeta factor");
    add_pair_options(zm, zm_args);
    zm->add_option("--q", q_arg)->required();
    zm->add_flag("--json", as_json);
    zm->add_option("--cache", cache_dir);
    auto* zv = zeta->add_subcommand("verify", "three-route verification report");
    add_pair_options(zv, zv_args);
    zv->add_option("--q", q_arg)->required();
    zv->add_flag("--json", as_json);
    zv->add_option("--cache", cache_dir);

    auto* padic = app.add_subcommand("padic", "p-adic verification layer");
    padic->require_subcommand(1);
    long p_arg = 5;
    auto* gk = padic->add_subcommand("gk", "Gross-Koblitz identity check");
    gk->add_option("--p", p_arg, "prime p")->required();
    gk->add_option("--prec", prec, "pi-adic precision");
    gk->add_flag("--json", as_json);

    auto* va = app.add_subcommand("verify-all", "cross-route verification suite");
    std::vector<long> va_pair;
    va->add_option("--pair", va_pair, "m q1 q2 q3 q4 q5")->expected(6);
    va->add_option("--q", q_arg, "prime power q for the zeta checks");
    va->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (wl->parsed()) return cmd_weights_list(as_json ? "json" : format);
        if (wc->parsed()) {
            auto pair = resolve_pair(wc_args);
            std::cout << pair.str() << " is admissible\n";
            return kExitOk;
        }
        if (ws->parsed()) return cmd_weights_summary(resolve_pair(ws_args), as_json);
        if (mt->parsed()) return cmd_motives_table(resolve_pair(mt_args), as_json);
        if (mi->parsed()) return cmd_mirror_invariants(resolve_pair(mi_args), as_json);
        if (mg->parsed()) return cmd_mirror_group(resolve_pair(mg_args), as_json);
        if (mc->parsed()) return cmd_monomials_classify(resolve_pair(mc_args), as_json);
        if (mr->parsed()) return cmd_monomials_correspond(resolve_pair(mr_args), as_json);
        if (pi->parsed()) return cmd_polytope_info(resolve_pair(pi_args), as_json);
        if (ph->parsed()) return cmd_polytope_hodge(resolve_pair(ph_args), as_json);
        if (zf->parsed() || zc->parsed() || zm->parsed() || zv->parsed()) {
            auto cache = open_cache(cache_dir);
            if (zf->parsed())
                return cmd_zeta_factors(resolve_pair(zf_args), q_arg, as_json, cache.get());
            if (zc->parsed()) return cmd_zeta_count(resolve_pair(zc_args), q_arg, routes, as_json);
            if (zm->parsed())
                return cmd_zeta_mirror(resolve_pair(zm_args), q_arg, as_json, cache.get());
            auto pair = resolve_pair(zv_args);
            return emit_report("zeta verify", verify_pair(pair, q_arg), as_json);
        }
        if (gk->parsed()) return cmd_padic_gk(p_arg, prec, as_json);
        if (va->parsed()) {
            std::optional<PairArgs> pa;
            if (!va_pair.empty()) {
                PairArgs args;
                args.m = va_pair[0];
                args.q.assign(va_pair.begin() + 1, va_pair.end());
                pa = args;
            }
            if (pa && q_arg == 0) {
                std::cerr << "error: --pair requires --q\n";
                return kExitUsage;
            }
            return cmd_verify_all(pa, q_arg, as_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
