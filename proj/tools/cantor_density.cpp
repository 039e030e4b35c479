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

// cantor-density: densities, spectrum queries, survivor-set dimensions and
// the Devil's-staircase dataset for the family of middle-gap Cantor measures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/atlas.hpp"
#include "cantor/density.hpp"
#include "cantor/expansion.hpp"
#include "cantor/parallel.hpp"

using json = nlohmann::ordered_json;
using namespace cantor;

namespace {

struct RunConfig {
    std::string rho = "1/3";
    int precision = 50;
    double tol = 1e-9;
    size_t max_word_len = 12;
    std::string out;
    std::string format = "table";  // table | jsonl | csv | svg
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

RhoParams make_params(const RunConfig& cfg) {
    return RhoParams::make(Rational::parse(cfg.rho), cfg.precision);
}

// Output sink: file when --out given, else stdout.
struct Sink {
    explicit Sink(const RunConfig& cfg) {
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file) throw invalid_input("cannot open output file: " + cfg.out);
        }
    }
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

void emit_record(std::ostream& os, const RunConfig& cfg, const json& j) {
    if (cfg.format == "jsonl") {
        os << j.dump() << "\n";
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << it.key() << " = "
               << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
               << "\n";
        }
    }
}

// ---------------------------------------------------------------- constants

int cmd_constants(const RunConfig& cfg) {
    RhoParams p = make_params(cfg);
    Sink sink(cfg);
    std::ostream& os = sink.stream();
    Rational t_g = p.rho() / (Rational(1) + p.rho());
    size_t kl_digits = std::max<size_t>(128, static_cast<size_t>(cfg.precision) * 3);
    auto [kl_lo, kl_hi] = t_kl_bounds(p, kl_digits);
    Rational kl_mid = (kl_lo + kl_hi) / Rational(2);
    BaseQ qg = solve_base_for_alpha(EpSeq::parse("(10)"), cfg.precision);
    BaseQ qkl = komornik_loreti_base(cfg.precision, 96);
    Decimal dstar = d_star_lower(p);
    Decimal dstar_up = d_star_upper(p);

    struct Row {
        const char* name;
        std::string value;
        const char* provenance;
    };
    int digits = cfg.precision;
    std::vector<Row> rows = {
        {"s", p.s().str(digits), "decimal-series log2/(-log rho)"},
        {"t_G", t_g.str() + " = " + t_g.decimal_str(digits), "exact-rational"},
        {"t_KL", kl_mid.decimal_str(digits), "certified-bracket (prefix series)"},
        {"q_G", qg.q.str(std::min(digits, 40)), "certified-bisection"},
        {"q_KL", qkl.q.str(std::min(digits, 14)), "certified-bisection (1e-14)"},
        {"d_star", dstar.str(digits), "formula at tau=0"},
        {"d_star_upper", dstar_up.str(digits), "formula 2*d_star"},
    };
    if (cfg.format == "jsonl") {
        for (const auto& r : rows) {
            json j;
            j["name"] = r.name;
            j["value"] = r.value;
            j["provenance"] = r.provenance;
            os << j.dump() << "\n";
        }
    } else {
        for (const auto& r : rows)
            os << r.name << " = " << r.value << "   [" << r.provenance << "]\n";
    }
    return 0;
}

// ------------------------------------------------------------------ density

int cmd_density(const RunConfig& cfg, const std::string& coding_text) {
    RhoParams p = make_params(cfg);
    EpSeq coding = EpSeq::parse(coding_text);
    CantorPoint x(coding, p);
    Rational tau = tau_exact(coding, p);
    DensityValue d = density_pair(x, p);
    Sink sink(cfg);
    json j;
    j["coding"] = coding.str();
    j["value"] = x.value.str();
    j["tau"] = tau.str();
    j["tau_decimal"] = tau.decimal_str(std::min(cfg.precision, 30));
    j["lower_density"] = d.lower.str(cfg.precision);
    j["upper_density"] = d.upper.str(cfg.precision);
    j["endpoint_case"] = d.endpoint_case;
    emit_record(sink.stream(), cfg, j);
    return 0;
}

int cmd_tau(const RunConfig& cfg, const std::string& coding_text, size_t numeric_iters) {
    RhoParams p = make_params(cfg);
    EpSeq coding = EpSeq::parse(coding_text);
    Rational tau = tau_exact(coding, p);
    Sink sink(cfg);
    json j;
    j["coding"] = coding.str();
    j["tau"] = tau.str();
    j["tau_decimal"] = tau.decimal_str(std::min(cfg.precision, 30));
    if (numeric_iters > 0) {
        TauEstimate est = tau_numeric(pi(coding, p), p, numeric_iters);
        j["tau_numeric"] = est.value.str();
        j["tau_numeric_certified"] = est.certified;
        j["tau_numeric_note"] = "estimate only - liminf not certified";
    }
    emit_record(sink.stream(), cfg, j);
    return 0;
}

// -------------------------------------------------------------------- gamma

const char* kind_name(GammaKind k) {
    switch (k) {
        case GammaKind::NotInGamma: return "not-in-gamma";
        case GammaKind::IsolatedInGamma: return "isolated";
        case GammaKind::AccumulationInGamma: return "accumulation";
    }
    return "?";
}

int cmd_gamma_check(const RunConfig& cfg, const std::string& coding_text) {
    RhoParams p = make_params(cfg);
    bool ok = in_gamma(EpSeq::parse(coding_text), p);
    Sink sink(cfg);
    json j;
    j["coding"] = EpSeq::parse(coding_text).str();
    j["in_gamma"] = ok;
    if (cfg.format == "jsonl")
        sink.stream() << j.dump() << "\n";
    else
        sink.stream() << (ok ? "true" : "false") << "\n";
    return 0;
}

int cmd_gamma_classify(const RunConfig& cfg, const std::string& coding_text) {
    RhoParams p = make_params(cfg);
    auto cls = classify_gamma(EpSeq::parse(coding_text), p);
    Sink sink(cfg);
    json j;
    j["coding"] = EpSeq::parse(coding_text).str();
    j["class"] = kind_name(cls.kind);
    if (cls.witness) j["witness"] = *cls.witness;
    emit_record(sink.stream(), cfg, j);
    return 0;
}

int cmd_gamma_enumerate(const RunConfig& cfg, size_t max_period) {
    RhoParams p = make_params(cfg);
    auto members = enumerate_gamma_periodic(max_period, p);
    Sink sink(cfg);
    std::ostream& os = sink.stream();
    for (const auto& [point, cls] : members) {
        json j;
        j["coding"] = point.coding.str();
        j["value"] = point.value.str();
        j["class"] = kind_name(cls.kind);
        if (cls.witness) j["witness"] = *cls.witness;
        if (cfg.format == "jsonl")
            os << j.dump() << "\n";
        else
            os << point.coding.str() << "  " << point.value.str() << "  " << kind_name(cls.kind)
               << (cls.witness ? " n=" + std::to_string(*cls.witness) : "") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------- dim

json dim_result_json(const DimensionResult& r) {
    json j;
    j["value"] = r.value;
    j["upper_bound"] = r.upper_bound;
    j["lower_witness"] = r.lower_witness;
    j["entropy"] = r.entropy;
    j["block_len"] = r.block_len_used;
    j["converged"] = r.converged;
    j["empty"] = r.empty;
    return j;
}

int cmd_dim_survivor(const RunConfig& cfg, const std::string& t_text, size_t n_max) {
    RhoParams p = make_params(cfg);
    DimOptions opts;
    opts.tol = cfg.tol;
    if (n_max) opts.n_max = n_max;
    DimensionResult r = dim_survivor(Rational::parse(t_text), p, opts);
    Sink sink(cfg);
    json j;
    j["t"] = Rational::parse(t_text).str();
    j.update(dim_result_json(r));
    emit_record(sink.stream(), cfg, j);
    return 0;
}

int cmd_dim_levelset(const RunConfig& cfg, const std::string& t_text, size_t max_len) {
    RhoParams p = make_params(cfg);
    Rational t = Rational::parse(t_text);
    EpSeq coding = delta(t, p);
    CantorPoint point(coding, p);
    if (!(point.value == t)) throw not_in_gamma("t is not a point of the Cantor set: " + t.str());
    Atlas atlas(p, max_len ? max_len : cfg.max_word_len);
    DimOptions opts;
    opts.tol = cfg.tol;
    LevelSetResult r = atlas.level_set_dimension(point, opts);
    Sink sink(cfg);
    json j;
    j["t"] = t.str();
    j["dimension"] = r.dimension;
    switch (r.kind) {
        case LevelSetKind::CountablyInfinite: j["kind"] = "countably-infinite"; break;
        case LevelSetKind::FromRenormalization:
            j["kind"] = (r.word && r.word->str() == "0") ? "e-branch" : "renormalized";
            break;
        case LevelSetKind::ZeroByCascade: j["kind"] = "zero-by-cascade"; break;
        case LevelSetKind::FullAtZero: j["kind"] = "full-at-zero"; break;
    }
    if (r.word) j["word"] = r.word->str();
    if (r.t_hat) j["t_hat"] = r.t_hat->value.str();
    j["depth_certified"] = r.depth_certified;
    emit_record(sink.stream(), cfg, j);
    return 0;
}

// ---------------------------------------------------------------- staircase

void write_staircase_csv(std::ostream& os, const std::vector<PlateauSegment>& segs) {
    os << "t_left_num,t_left_den,t_right_num,t_right_den,psi,word,converged\n";
    for (const auto& s : segs) {
        os << s.t_left.num().get_str() << "," << s.t_left.den().get_str() << ","
           << s.t_right.num().get_str() << "," << s.t_right.den().get_str() << ","
           << fmt_double(s.psi) << "," << s.word.str() << "," << (s.converged ? 1 : 0) << "\n";
    }
}

void write_staircase_svg(std::ostream& os, const std::vector<PlateauSegment>& segs,
                         const RhoParams& p) {
    const double W = 840, H = 560, ml = 70, mr = 30, mt = 30, mb = 50;
    Rational t_g = p.rho() / (Rational(1) + p.rho());
    double xmax = t_g.to_double() * 1.15;
    double ymax = std::log(2.0) / p.neg_log_rho();
    auto X = [&](double t) { return ml + (W - ml - mr) * (t / xmax); };
    auto Y = [&](double v) { return H - mb - (H - mt - mb) * (v / ymax); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 840 560\">\n";
    os << "<rect width=\"840\" height=\"560\" fill=\"white\"/>\n";
    os << "<line x1=\"" << fmt_double(ml) << "\" y1=\"" << fmt_double(H - mb) << "\" x2=\""
       << fmt_double(W - mr) << "\" y2=\"" << fmt_double(H - mb)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << fmt_double(ml) << "\" y1=\"" << fmt_double(mt) << "\" x2=\""
       << fmt_double(ml) << "\" y2=\"" << fmt_double(H - mb)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // staircase polyline: steps down at plateau boundaries
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    double prev_y = Y(ymax);
    os << fmt_double(X(0)) << "," << fmt_double(prev_y) << " ";
    for (const auto& s : segs) {
        double xl = X(s.t_left.to_double()), xr = X(s.t_right.to_double()), y = Y(s.psi);
        os << fmt_double(xl) << "," << fmt_double(prev_y) << " ";
        os << fmt_double(xl) << "," << fmt_double(y) << " ";
        os << fmt_double(xr) << "," << fmt_double(y) << " ";
        prev_y = y;
    }
    os << "\"/>\n";
    auto [kl_lo, kl_hi] = t_kl_bounds(p, 64);
    double xkl = X(kl_hi.to_double());
    os << "<line x1=\"" << fmt_double(xkl) << "\" y1=\"" << fmt_double(mt) << "\" x2=\""
       << fmt_double(xkl) << "\" y2=\"" << fmt_double(H - mb)
       << "\" stroke=\"gray\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fmt_double(xkl - 14) << "\" y=\"" << fmt_double(H - mb + 18)
       << "\" font-size=\"13\" font-family=\"monospace\">t_KL</text>\n";
    os << "<text x=\"" << fmt_double(ml - 55) << "\" y=\"" << fmt_double(mt + 6)
       << "\" font-size=\"13\" font-family=\"monospace\">dim</text>\n";
    os << "</svg>\n";
}

int cmd_staircase(const RunConfig& cfg, size_t max_word_len) {
    RhoParams p = make_params(cfg);
    DimOptions opts;
    opts.tol = cfg.tol;
    size_t len = max_word_len ? max_word_len : cfg.max_word_len;
    auto segs = staircase(p, len, opts);
    Sink sink(cfg);
    std::ostream& os = sink.stream();
    if (cfg.format == "svg") {
        write_staircase_svg(os, segs, p);
    } else if (cfg.format == "jsonl") {
        for (const auto& s : segs) {
            json j;
            j["t_left"] = s.t_left.str();
            j["t_right"] = s.t_right.str();
            j["psi"] = s.psi;
            j["word"] = s.word.str();
            j["converged"] = s.converged;
            os << j.dump() << "\n";
        }
    } else {
        write_staircase_csv(os, segs);
    }
    return 0;
}

int cmd_atlas(const RunConfig& cfg, size_t max_len) {
    RhoParams p = make_params(cfg);
    size_t len = max_len ? max_len : cfg.max_word_len;
    Atlas atlas(p, len);
    DimOptions opts;
    opts.tol = cfg.tol;
    const auto& intervals = atlas.intervals();
    std::vector<double> psi(intervals.size(), 0.0);
    std::vector<bool> conv(intervals.size(), true);
    parallel_for(intervals.size(), [&](size_t i) {
        if (intervals[i].is_outermost()) return;
        SandwichSystem sys = SandwichSystem::from_beta(intervals[i].t_right.coding);
        DimensionResult r = entropy(sys, opts);
        psi[i] = r.value / p.neg_log_rho();
        conv[i] = r.converged;
    });
    Sink sink(cfg);
    std::ostream& os = sink.stream();
    os << "word,t_left,t_right,psi,nesting_depth\n";
    for (size_t i = 0; i < intervals.size(); ++i) {
        const auto& j = intervals[i];
        os << j.generator.str() << "," << j.t_left.value.str() << "," << j.t_right.value.str()
           << "," << fmt_double(psi[i]) << "," << atlas.nesting_depth(j) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- oracle

int cmd_oracle_blocks(const RunConfig& cfg, const std::string& beta_text, size_t n) {
    SandwichSystem sys = SandwichSystem::from_beta(EpSeq::parse(beta_text));
    Sink sink(cfg);
    json j;
    j["beta"] = sys.lower.str();
    j["n"] = n;
    j["count"] = count_blocks(sys, n);
    emit_record(sink.stream(), cfg, j);
    return 0;
}

int cmd_oracle_ballmeasure(const RunConfig& cfg, const std::string& x_text,
                           const std::string& r_text, int depth) {
    RhoParams p = make_params(cfg);
    auto enc = ball_measure(Rational::parse(x_text), Rational::parse(r_text), p, depth);
    Sink sink(cfg);
    json j;
    j["x"] = Rational::parse(x_text).str();
    j["r"] = Rational::parse(r_text).str();
    j["depth"] = depth;
    j["lo"] = enc.lo.str();
    j["hi"] = enc.hi.str();
    emit_record(sink.stream(), cfg, j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"density spectrum toolkit for middle-gap Cantor measures"};
    app.set_config("--config", "", "config file with key=value lines");

    RunConfig cfg;
    app.add_option("--rho", cfg.rho, "contraction ratio, rational in (0,1/3]")
        ->capture_default_str();
    app.add_option("--precision", cfg.precision, "decimal digit budget (>= 20)")
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "entropy convergence tolerance")->capture_default_str();
    app.add_option("--max-word-len", cfg.max_word_len, "generator length budget")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--format", cfg.format, "table | jsonl | csv | svg")->capture_default_str();
    app.require_subcommand(1);

    auto* c_const = app.add_subcommand("constants", "print the model constants");

    std::string coding_text;
    auto* c_density = app.add_subcommand("density", "pointwise lower/upper densities at a coding");
    c_density->add_option("--coding", coding_text, "EpSeq text PRE(PER)")->required();

    std::string tau_coding;
    size_t tau_iters = 0;
    auto* c_tau = app.add_subcommand("tau", "exact tau of an eventually periodic coding");
    c_tau->add_option("--coding", tau_coding, "EpSeq text PRE(PER)")->required();
    c_tau->add_option("--numeric-iters", tau_iters, "also run the orbit-sampling estimate");

    auto* c_gamma = app.add_subcommand("gamma", "density-spectrum membership queries");
    c_gamma->require_subcommand(1);
    std::string gamma_coding;
    auto* c_gcheck = c_gamma->add_subcommand("check", "membership test");
    c_gcheck->add_option("--coding", gamma_coding, "EpSeq text")->required();
    std::string gamma_coding2;
    auto* c_gclass = c_gamma->add_subcommand("classify", "isolated/accumulation classification");
    c_gclass->add_option("--coding", gamma_coding2, "EpSeq text")->required();
    size_t gamma_period = 8;
    auto* c_genum = c_gamma->add_subcommand("enumerate", "purely periodic members");
    c_genum->add_option("--max-period", gamma_period, "primitive period bound (<= 24)")
        ->capture_default_str();

    auto* c_dim = app.add_subcommand("dim", "Hausdorff dimensions");
    c_dim->require_subcommand(1);
    std::string dim_t;
    size_t dim_nmax = 0;
    auto* c_dsurv = c_dim->add_subcommand("survivor", "dimension of the survivor set at level t");
    c_dsurv->add_option("--t", dim_t, "level, rational in [0,1]")->required();
    c_dsurv->add_option("--n-max", dim_nmax, "window length cap");
    std::string lvl_t;
    size_t lvl_maxlen = 0;
    auto* c_dlvl = c_dim->add_subcommand("levelset", "dimension of the tau level set at t");
    c_dlvl->add_option("--t", lvl_t, "level, rational; must be a spectrum point")->required();
    c_dlvl->add_option("--max-len", lvl_maxlen, "atlas generator length budget");

    size_t stair_len = 0;
    auto* c_stair = app.add_subcommand("staircase", "plateau dataset of t -> dim");
    c_stair->add_option("--max-word-len", stair_len, "generator length budget (<= 16)");

    size_t atlas_len = 0;
    auto* c_atlas = app.add_subcommand("atlas", "fundamental interval table (CSV)");
    c_atlas->add_option("--max-len", atlas_len, "generator length budget (<= 16)");

    auto* c_oracle = app.add_subcommand("oracle", "brute-force oracles");
    c_oracle->require_subcommand(1);
    std::string beta_text;
    size_t oracle_n = 8;
    auto* c_blocks = c_oracle->add_subcommand("blocks", "window-admissible word count");
    c_blocks->add_option("--beta", beta_text, "lower bound EpSeq")->required();
    c_blocks->add_option("--n", oracle_n, "word length (<= 24)")->capture_default_str();
    std::string ball_x = "0", ball_r = "1/9";
    int ball_depth = 20;
    auto* c_ball = c_oracle->add_subcommand("ballmeasure", "measure enclosure of a ball");
    c_ball->add_option("--x", ball_x, "center (rational)")->capture_default_str();
    c_ball->add_option("--r", ball_r, "radius (rational)")->capture_default_str();
    c_ball->add_option("--depth", ball_depth, "cylinder depth")->capture_default_str();

    // global flags remain usable after a subcommand name
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (cfg.format == "json-lines") cfg.format = "jsonl";

    try {
        if (*c_const) return cmd_constants(cfg);
        if (*c_density) return cmd_density(cfg, coding_text);
        if (*c_tau) return cmd_tau(cfg, tau_coding, tau_iters);
        if (*c_gcheck) return cmd_gamma_check(cfg, gamma_coding);
        if (*c_gclass) return cmd_gamma_classify(cfg, gamma_coding2);
        if (*c_genum) return cmd_gamma_enumerate(cfg, gamma_period);
        if (*c_dsurv) return cmd_dim_survivor(cfg, dim_t, dim_nmax);
        if (*c_dlvl) return cmd_dim_levelset(cfg, lvl_t, lvl_maxlen);
        if (*c_stair) return cmd_staircase(cfg, stair_len);
        if (*c_atlas) return cmd_atlas(cfg, atlas_len);
        if (*c_blocks) return cmd_oracle_blocks(cfg, beta_text, oracle_n);
        if (*c_ball) return cmd_oracle_ballmeasure(cfg, ball_x, ball_r, ball_depth);
    } catch (const resource_limit& e) {
        std::cerr << "error: ResourceLimit: " << e.what() << "\n";
        return 3;
    } catch (const not_in_cantor_set& e) {
        std::cerr << "error: NotInCantorSet: " << e.what() << "\n";
        return 4;
    } catch (const outside_domain& e) {
        std::cerr << "error: OutsideDomain: " << e.what() << "\n";
        return 4;
    } catch (const not_in_gamma& e) {
        std::cerr << "error: NotInGamma: " << e.what() << "\n";
        return 4;
    } catch (const not_quasi_greedy& e) {
        std::cerr << "error: NotQuasiGreedy: " << e.what() << "\n";
        return 4;
    } catch (const not_in_image& e) {
        std::cerr << "error: NotInImage: " << e.what() << "\n";
        return 4;
    } catch (const invalid_input& e) {
        std::cerr << "error: InvalidInput: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
