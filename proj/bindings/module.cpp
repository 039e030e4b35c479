/* Copyright 2026 The cantor-density Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantor/atlas.hpp"
#include "cantor/density.hpp"
#include "cantor/expansion.hpp"

namespace py = pybind11;
using namespace cantor;

namespace {

RhoParams params(const std::string& rho, int precision) {
    return RhoParams::make(Rational::parse(rho), precision);
}

py::dict dim_dict(const DimensionResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["upper_bound"] = r.upper_bound;
    d["lower_witness"] = r.lower_witness;
    d["entropy"] = r.entropy;
    d["block_len"] = r.block_len_used;
    d["converged"] = r.converged;
    d["empty"] = r.empty;
    return d;
}

} // namespace

PYBIND11_MODULE(cantor_density, m) {
    m.doc() = "density spectrum toolkit for middle-gap Cantor measures";

    m.def(
        "pi",
        [](const std::string& coding, const std::string& rho, int precision) {
            auto p = params(rho, precision);
            return pi(EpSeq::parse(coding), p).str();
        },
        py::arg("coding"), py::arg("rho") = "1/3", py::arg("precision") = 50,
        "value of the coding map, as an exact rational string");

    m.def(
        "pi_float",
        [](const std::string& coding, const std::string& rho, int precision) {
            auto p = params(rho, precision);
            return pi(EpSeq::parse(coding), p).to_double();
        },
        py::arg("coding"), py::arg("rho") = "1/3", py::arg("precision") = 50);

    m.def(
        "pi_inverse",
        [](const std::string& x, const std::string& rho, int precision) {
            auto p = params(rho, precision);
            return pi_inverse(Rational::parse(x), p).str();
        },
        py::arg("x"), py::arg("rho") = "1/3", py::arg("precision") = 50,
        "unique coding of a Cantor point, as PRE(PER) text");

    m.def(
        "delta",
        [](const std::string& t, const std::string& rho, int precision) {
            auto p = params(rho, precision);
            return delta(Rational::parse(t), p).str();
        },
        py::arg("t"), py::arg("rho") = "1/3", py::arg("precision") = 50,
        "coding of the smallest Cantor point >= t");

    m.def(
        "tau",
        [](const std::string& coding, const std::string& rho, int precision) {
            auto p = params(rho, precision);
            return tau_exact(EpSeq::parse(coding), p).str();
        },
        py::arg("coding"), py::arg("rho") = "1/3", py::arg("precision") = 50);

    m.def(
        "in_gamma",
        [](const std::string& coding, const std::string& rho) {
            auto p = params(rho, 50);
            return in_gamma(EpSeq::parse(coding), p);
        },
        py::arg("coding"), py::arg("rho") = "1/3");

    m.def(
        "classify_gamma",
        [](const std::string& coding, const std::string& rho) {
            auto p = params(rho, 50);
            auto cls = classify_gamma(EpSeq::parse(coding), p);
            switch (cls.kind) {
                case GammaKind::NotInGamma: return std::string("not-in-gamma");
                case GammaKind::IsolatedInGamma:
                    return "isolated:" + std::to_string(*cls.witness);
                case GammaKind::AccumulationInGamma: return std::string("accumulation");
            }
            return std::string("?");
        },
        py::arg("coding"), py::arg("rho") = "1/3");

    m.def(
        "thue_morse",
        [](size_t n) { return thue_morse_prefix(n).str(); }, py::arg("n"));

    m.def(
        "is_admissible",
        [](const std::string& word) { return is_admissible(BinaryWord::parse(word)); },
        py::arg("word"));

    m.def(
        "densities",
        [](const std::string& coding, const std::string& rho, int precision) {
            auto p = params(rho, precision);
            CantorPoint x(EpSeq::parse(coding), p);
            DensityValue d = density_pair(x, p);
            py::dict out;
            out["tau"] = tau_exact(x.coding, p).str();
            out["lower"] = d.lower.to_double();
            out["upper"] = d.upper.to_double();
            out["lower_str"] = d.lower.str(precision);
            out["upper_str"] = d.upper.str(precision);
            out["endpoint_case"] = d.endpoint_case;
            return out;
        },
        py::arg("coding"), py::arg("rho") = "1/3", py::arg("precision") = 50);

    m.def(
        "ball_measure",
        [](const std::string& x, const std::string& r, const std::string& rho, int depth) {
            auto p = params(rho, 50);
            auto enc = ball_measure(Rational::parse(x), Rational::parse(r), p, depth);
            return py::make_tuple(enc.lo.str(), enc.hi.str());
        },
        py::arg("x"), py::arg("r"), py::arg("rho") = "1/3", py::arg("depth") = 20);

    m.def(
        "quasi_greedy",
        [](double q, size_t n, int precision) {
            auto b = quasi_greedy_alpha(Decimal::from_double(q, precision + 10), n, precision);
            return b.alpha_prefix.str();
        },
        py::arg("q"), py::arg("n") = 32, py::arg("precision") = 50);

    m.def(
        "solve_base",
        [](const std::string& alpha, int precision) {
            return solve_base_for_alpha(EpSeq::parse(alpha), precision).q_double;
        },
        py::arg("alpha"), py::arg("precision") = 50);

    m.def(
        "komornik_loreti",
        [](int precision) { return komornik_loreti_base(precision, 96).q_double; },
        py::arg("precision") = 50);

    m.def(
        "dim_survivor",
        [](const std::string& t, const std::string& rho, double tol, size_t n_max) {
            auto p = params(rho, 50);
            DimOptions opts;
            opts.tol = tol;
            opts.n_max = n_max;
            return dim_dict(dim_survivor(Rational::parse(t), p, opts));
        },
        py::arg("t"), py::arg("rho") = "1/3", py::arg("tol") = 1e-9, py::arg("n_max") = 40);

    m.def(
        "level_set_dimension",
        [](const std::string& t, const std::string& rho, size_t max_len) {
            auto p = params(rho, 50);
            Rational tv = Rational::parse(t);
            CantorPoint point(delta(tv, p), p);
            if (!(point.value == tv))
                throw not_in_gamma("t is not a point of the Cantor set: " + tv.str());
            Atlas atlas(p, max_len);
            auto r = atlas.level_set_dimension(point);
            py::dict out;
            out["dimension"] = r.dimension;
            switch (r.kind) {
                case LevelSetKind::CountablyInfinite: out["kind"] = "countably-infinite"; break;
                case LevelSetKind::FromRenormalization:
                    out["kind"] = (r.word && r.word->str() == "0") ? "e-branch" : "renormalized";
                    break;
                case LevelSetKind::ZeroByCascade: out["kind"] = "zero-by-cascade"; break;
                case LevelSetKind::FullAtZero: out["kind"] = "full-at-zero"; break;
            }
            if (r.word) out["word"] = r.word->str();
            return out;
        },
        py::arg("t"), py::arg("rho") = "1/3", py::arg("max_len") = 10);

    m.def(
        "staircase",
        [](const std::string& rho, size_t max_word_len) {
            auto p = params(rho, 50);
            auto segs = staircase(p, max_word_len);
            py::list out;
            for (const auto& s : segs) {
                py::dict d;
                d["t_left"] = s.t_left.str();
                d["t_right"] = s.t_right.str();
                d["t_left_float"] = s.t_left.to_double();
                d["t_right_float"] = s.t_right.to_double();
                d["psi"] = s.psi;
                d["word"] = s.word.str();
                d["converged"] = s.converged;
                out.append(d);
            }
            return out;
        },
        py::arg("rho") = "1/3", py::arg("max_word_len") = 8);

    m.def(
        "lambda_n_dimension",
        [](size_t N, const std::string& rho) {
            auto p = params(rho, 50);
            auto c = lambda_N_dimension(N, p);
            return py::make_tuple(c.closed_form, c.engine);
        },
        py::arg("N"), py::arg("rho") = "1/3");

    m.def(
        "count_blocks",
        [](const std::string& beta, size_t n) {
            return count_blocks(SandwichSystem::from_beta(EpSeq::parse(beta)), n);
        },
        py::arg("beta"), py::arg("n"));

    m.def("constants", [](const std::string& rho, int precision) {
        auto p = params(rho, precision);
        Rational t_g = p.rho() / (Rational(1) + p.rho());
        auto [kl_lo, kl_hi] = t_kl_bounds(p, 128);
        py::dict out;
        out["s"] = p.s_double();
        out["t_G"] = t_g.str();
        out["t_KL"] = ((kl_lo + kl_hi) / Rational(2)).to_double();
        out["q_G"] = solve_base_for_alpha(EpSeq::parse("(10)"), precision).q_double;
        out["q_KL"] = komornik_loreti_base(precision, 96).q_double;
        out["d_star"] = d_star_lower(p).to_double();
        out["d_star_upper"] = d_star_upper(p).to_double();
        return out;
    }, py::arg("rho") = "1/3", py::arg("precision") = 50);

    py::register_exception<resource_limit>(m, "ResourceLimit");
    py::register_exception<not_in_cantor_set>(m, "NotInCantorSet");
    py::register_exception<not_in_gamma>(m, "NotInGamma");
    py::register_exception<not_quasi_greedy>(m, "NotQuasiGreedy");
    py::register_exception<not_in_image>(m, "NotInImage");
}
