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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motiveforge/mirror.hpp"
#include "motiveforge/monomials.hpp"
#include "motiveforge/motives.hpp"
#include "motiveforge/padic.hpp"
#include "motiveforge/polytopes.hpp"
#include "motiveforge/weights.hpp"
#include "motiveforge/zeta.hpp"

namespace py = pybind11;
using namespace motiveforge;

namespace {

AdmissiblePair to_pair(long m, std::vector<long> q) {
    if (q.size() != 5) throw std::invalid_argument("expected five weights");
    Weight w;
    std::copy(q.begin(), q.end(), w.begin());
    return make_pair_checked(m, w);
}

py::list label_list(const Character& a) {
    py::list out;
    for (long v : a) out.append(v);
    return out;
}

py::list poly_strings(const IntPoly& p) {
    py::list out;
    for (long i = 0; i <= p.degree(); ++i) out.append(p.coeff(i).get_str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic of weighted Fermat Calabi-Yau threefolds";

    m.def("enumerate_admissible", []() {
        py::list out;
        for (const auto& p : enumerate_admissible()) {
            py::dict rec;
            rec["m"] = p.m;
            rec["q"] = std::vector<long>(p.q.begin(), p.q.end());
            out.append(rec);
        }
        return out;
    });

    m.def("is_admissible", [](long m, std::vector<long> q) {
        if (q.size() != 5) throw std::invalid_argument("expected five weights");
        Weight w;
        std::copy(q.begin(), q.end(), w.begin());
        std::sort(w.begin(), w.end());
        return is_admissible(m, w);
    }, py::arg("m"), py::arg("q"));

    m.def("vafa_summary", [](long m, std::vector<long> q) {
        auto pair = to_pair(m, std::move(q));
        auto vs = vafa_summary(pair);
        py::dict out;
        out["B3_Y"] = vs.b3_y;
        out["B3_X"] = vs.b3_x;
        out["chi"] = vs.chi;
        out["h11"] = vs.h11;
        out["h21"] = vs.h21;
        return out;
    }, py::arg("m"), py::arg("q"));

    m.def("motives", [](long m, std::vector<long> q) {
        auto pair = to_pair(m, std::move(q));
        py::list out;
        for (const auto& mo : motive_orbits(pair)) {
            py::dict rec;
            rec["label"] = label_list(mo.label);
            rec["dim"] = mo.dim;
            rec["mult"] = mo.mult;
            rec["h30"] = mo.hodge[0];
            rec["h21"] = mo.hodge[1];
            out.append(rec);
        }
        return out;
    }, py::arg("m"), py::arg("q"));

    m.def("mirror_group", [](long m, std::vector<long> q) {
        auto pair = to_pair(m, std::move(q));
        MirrorGroup g = build_ghat(pair);
        py::dict out;
        out["order"] = g.order;
        out["elementary_divisors"] = g.elementary_divisors;
        return out;
    }, py::arg("m"), py::arg("q"));

    m.def("invariant_motives", [](long m, std::vector<long> q) {
        auto pair = to_pair(m, std::move(q));
        py::list out;
        for (const auto& mo : invariant_motives(pair)) {
            py::dict rec;
            rec["label"] = label_list(mo.label);
            rec["dim"] = mo.dim;
            out.append(rec);
        }
        return out;
    }, py::arg("m"), py::arg("q"));

    m.def("monomial_classes", [](long m, std::vector<long> q) {
        auto pair = to_pair(m, std::move(q));
        py::list out;
        for (const auto& c : classify(pair)) {
            py::dict rec;
            rec["rep"] = std::vector<long>(c.rep.begin(), c.rep.end());
            rec["mult"] = c.addition_orbits;
            rec["orbit_length"] = c.orbit_length;
            rec["conifold_only"] = c.conifold_only;
            py::list labels;
            for (const auto& lab : c.motive_labels) labels.append(label_list(lab));
            rec["motives"] = labels;
            out.append(rec);
        }
        return out;
    }, py::arg("m"), py::arg("q"));

    m.def("batyrev_hodge", [](long m, std::vector<long> q) {
        auto pair = to_pair(m, std::move(q));
        auto [h11, h21] = batyrev_hodge(pair);
        return py::make_tuple(h11, h21);
    }, py::arg("m"), py::arg("q"));

    m.def("local_factors", [](long m, std::vector<long> q, long qq) {
        auto pair = to_pair(m, std::move(q));
        py::list out;
        for (const auto& lf : all_local_factors(pair, qq)) {
            py::dict rec;
            rec["label"] = label_list(lf.label);
            rec["dim"] = lf.dim;
            rec["mult"] = lf.mult;
            rec["poly"] = poly_strings(lf.poly);
            py::list slopes;
            for (auto [n, d] : lf.slopes) slopes.append(py::make_tuple(n, d));
            rec["slopes"] = slopes;
            out.append(rec);
        }
        return out;
    }, py::arg("m"), py::arg("q"), py::arg("field_size"));

    m.def("count_points", [](long m, std::vector<long> q, long qq, bool brute) {
        auto pair = to_pair(m, std::move(q));
        auto rep = count_routes(pair, qq, brute);
        py::dict out;
        out["weil_available"] = rep.weil_available;
        out["N_motive"] = rep.n_motive.get_str();
        out["N_mon"] = rep.n_mon.get_str();
        out["N_weil_projective"] = rep.n_weil_projective.get_str();
        if (rep.n_brute_affine) out["N_brute_affine"] = rep.n_brute_affine->get_str();
        if (rep.n_dwork_affine) out["N_dwork_affine"] = rep.n_dwork_affine->get_str();
        out["agree"] = rep.routes_agree();
        return out;
    }, py::arg("m"), py::arg("q"), py::arg("field_size"), py::arg("brute") = false);

    m.def("mirror_factor", [](long m, std::vector<long> q, long qq) {
        auto pair = to_pair(m, std::move(q));
        return poly_strings(mirror_factor(pair, qq));
    }, py::arg("m"), py::arg("q"), py::arg("field_size"));

    m.def("gross_koblitz", [](long p, long prec) {
        auto rep = gross_koblitz_check(p, prec);
        py::dict out;
        out["pass"] = rep.pass;
        out["calibration"] = rep.calibration;
        out["checked_n"] = rep.checked_n;
        return out;
    }, py::arg("p"), py::arg("prec") = 20);

    m.def("projector_check", [](long m) {
        auto rep = projector_check(m);
        return rep.pass();
    }, py::arg("m"));
}
