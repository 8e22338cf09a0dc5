// Copyright 2026 The spinhalf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinhalf/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

namespace spinhalf::cli {

namespace {

// All floats in machine-readable output carry 17 significant digits so a
// reader recovers the exact double.
std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string r;
    r.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': r += "\\\""; break;
            case '\\': r += "\\\\"; break;
            case '\n': r += "\\n"; break;
            case '\t': r += "\\t"; break;
            default: r += c;
        }
    }
    return r;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string dir_json(const Direction& d) {
    const Vec3& n = d.cartesian();
    return "{\"theta\":" + g17(d.theta()) + ",\"phi\":" + g17(d.phi()) +
           ",\"x\":" + g17(n.x) + ",\"y\":" + g17(n.y) + ",\"z\":" + g17(n.z) + "}";
}

std::string dir_text(const Direction& d) {
    return "(theta=" + g6(d.theta()) + ", phi=" + g6(d.phi()) + ")";
}

std::string cplx_json(const cplx& z) {
    return "{\"re\":" + g17(z.real()) + ",\"im\":" + g17(z.imag()) + "}";
}

std::string cplx_text(const cplx& z) {
    return g6(z.real()) + (z.imag() < 0 ? " - " : " + ") + g6(std::abs(z.imag())) + "i";
}

// ---------------------------------------------------------------------- verify

int render_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions opt;
    opt.seed = cfg.verify_seed;
    opt.trials = cfg.trials;
    opt.tolerance_override = cfg.tolerance;
    const std::vector<CheckResult> checks = run_verification(opt);
    const bool ok = all_pass(checks);

    if (cfg.format == Format::json) {
        std::string s = "{\"command\":\"verify\",\"seed\":" + std::to_string(opt.seed) +
                        ",\"trials\":" + std::to_string(opt.trials) + ",\"checks\":[";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const CheckResult& c = checks[i];
            if (i) s += ",";
            s += "{\"name\":" + jstr(c.name) + ",\"trials\":" + std::to_string(c.trials) +
                 ",\"value\":" + g17(c.value) + ",\"bound\":" + g17(c.bound) + ",\"kind\":" +
                 jstr(c.kind == CheckResult::Kind::max_error ? "max_error" : "min_separation") +
                 ",\"pass\":" + jbool(c.pass) + "}";
        }
        s += "],\"all_pass\":" + jbool(ok) + "}\n";
        out << s;
    } else if (cfg.format == Format::csv) {
        out << "name,trials,value,bound,kind,pass\n";
        for (const CheckResult& c : checks)
            out << c.name << "," << c.trials << "," << g17(c.value) << "," << g17(c.bound)
                << ","
                << (c.kind == CheckResult::Kind::max_error ? "max_error" : "min_separation")
                << "," << (c.pass ? "1" : "0") << "\n";
    } else {
        char line[160];
        std::snprintf(line, sizeof(line), "%-34s %7s %13s %10s  %s\n", "check", "trials",
                      "value", "bound", "result");
        out << line;
        for (const CheckResult& c : checks) {
            std::snprintf(line, sizeof(line), "%-34s %7d %13s %s%9s  %s\n", c.name.c_str(),
                          c.trials, g6(c.value).c_str(),
                          c.kind == CheckResult::Kind::max_error ? "<=" : ">=",
                          g6(c.bound).c_str(), c.pass ? "pass" : "FAIL");
            out << line;
        }
        out << (ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    }
    return ok ? 0 : 1;
}

// -------------------------------------------------------------------- correlate

int render_correlate(const RunConfig& cfg, std::ostream& out) {
    const Direction& a = *cfg.a;
    const Direction& b = *cfg.b;
    const Direction r = cfg.r.value_or(Direction(0.0, 0.0));
    const double c = correlation(a, b);
    const CorrelationBreakdown fk = fk_decomposition(r, a, b);
    const JointDistribution jd = joint_distribution(a, b);
    double weighted = 0.0;
    for (int k = 0; k < 4; ++k) weighted += jd.eigenvalues[k] * jd.weights[k];
    const double minus_ab = -dot(a.cartesian(), b.cartesian());

    if (cfg.format == Format::json) {
        out << "{\"command\":\"correlate\",\"a\":" << dir_json(a) << ",\"b\":" << dir_json(b)
            << ",\"r\":" << dir_json(r) << ",\"correlation\":" << g17(c)
            << ",\"minus_a_dot_b\":" << g17(minus_ab) << ",\"breakdown\":{\"f1\":"
            << cplx_json(fk.f1) << ",\"f2\":" << cplx_json(fk.f2) << ",\"f3\":"
            << cplx_json(fk.f3) << ",\"f4\":" << cplx_json(fk.f4) << ",\"total\":"
            << g17(fk.total) << "},\"eigenvalue_weighted_sum\":" << g17(weighted) << "}\n";
    } else if (cfg.format == Format::csv) {
        out << "key,value\n";
        out << "correlation," << g17(c) << "\n";
        out << "minus_a_dot_b," << g17(minus_ab) << "\n";
        out << "f1_re," << g17(fk.f1.real()) << "\nf1_im," << g17(fk.f1.imag()) << "\n";
        out << "f2_re," << g17(fk.f2.real()) << "\nf2_im," << g17(fk.f2.imag()) << "\n";
        out << "f3_re," << g17(fk.f3.real()) << "\nf3_im," << g17(fk.f3.imag()) << "\n";
        out << "f4_re," << g17(fk.f4.real()) << "\nf4_im," << g17(fk.f4.imag()) << "\n";
        out << "breakdown_total," << g17(fk.total) << "\n";
        out << "eigenvalue_weighted_sum," << g17(weighted) << "\n";
    } else {
        out << "correlate  a=" << dir_text(a) << "  b=" << dir_text(b) << "\n";
        out << "  C(a,b)       = " << g17(c) << "\n";
        out << "  -a.b         = " << g17(minus_ab) << "\n";
        out << "  sum A_k C_k  = " << g17(weighted) << "\n";
        out << "  breakdown over the product basis aligned with r=" << dir_text(r) << ":\n";
        out << "    f1 = " << cplx_text(fk.f1) << "\n    f2 = " << cplx_text(fk.f2) << "\n";
        out << "    f3 = " << cplx_text(fk.f3) << "\n    f4 = " << cplx_text(fk.f4) << "\n";
        out << "    total = " << g17(fk.total) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------------ probs

int render_probs(const RunConfig& cfg, std::ostream& out) {
    const Direction& a = *cfg.a;
    const Direction& b = *cfg.b;
    const JointDistribution jd = joint_distribution(a, b);
    const int alphas[4] = {+1, -1, +1, -1};
    const int betas[4] = {-1, +1, +1, -1};
    double weight_sum = 0.0;
    for (int k = 0; k < 4; ++k) weight_sum += jd.weights[k];
    const double m1p = marginal(a, b, 1, +1), m1m = marginal(a, b, 1, -1);
    const double m2p = marginal(a, b, 2, +1), m2m = marginal(a, b, 2, -1);

    if (cfg.format == Format::json) {
        std::string s = "{\"command\":\"probs\",\"a\":" + dir_json(a) + ",\"b\":" + dir_json(b) +
                        ",\"joint\":[";
        for (int k = 0; k < 4; ++k) {
            if (k) s += ",";
            s += "{\"k\":" + std::to_string(k + 1) + ",\"alpha\":" + std::to_string(alphas[k]) +
                 ",\"beta\":" + std::to_string(betas[k]) + ",\"weight\":" + g17(jd.weights[k]) +
                 ",\"eigenvalue\":" + std::to_string(jd.eigenvalues[k]) + "}";
        }
        s += "],\"weight_sum\":" + g17(weight_sum) +
             ",\"marginals\":{\"side1_plus\":" + g17(m1p) + ",\"side1_minus\":" + g17(m1m) +
             ",\"side2_plus\":" + g17(m2p) + ",\"side2_minus\":" + g17(m2m) +
             "},\"conditionals\":[";
        bool first = true;
        for (int alpha : {+1, -1})
            for (int gb : {+1, -1}) {
                if (!first) s += ",";
                first = false;
                s += "{\"alpha\":" + std::to_string(alpha) +
                     ",\"given_beta\":" + std::to_string(gb) +
                     ",\"p\":" + g17(conditional(a, b, alpha, gb)) + "}";
            }
        s += "]}\n";
        out << s;
    } else if (cfg.format == Format::csv) {
        out << "key,value\n";
        for (int k = 0; k < 4; ++k) {
            out << "joint_k" << (k + 1) << "," << g17(jd.weights[k]) << "\n";
        }
        out << "weight_sum," << g17(weight_sum) << "\n";
        out << "marginal_side1_plus," << g17(m1p) << "\nmarginal_side1_minus," << g17(m1m)
            << "\nmarginal_side2_plus," << g17(m2p) << "\nmarginal_side2_minus," << g17(m2m)
            << "\n";
        for (int alpha : {+1, -1})
            for (int gb : {+1, -1})
                out << "conditional_alpha" << (alpha > 0 ? "+" : "-") << "_given_beta"
                    << (gb > 0 ? "+" : "-") << "," << g17(conditional(a, b, alpha, gb)) << "\n";
    } else {
        out << "probs  a=" << dir_text(a) << "  b=" << dir_text(b) << "\n";
        out << "  joint outcome weights (k: (alpha,beta) -> P):\n";
        for (int k = 0; k < 4; ++k) {
            out << "    " << (k + 1) << ": (" << (alphas[k] > 0 ? "+" : "-") << ","
                << (betas[k] > 0 ? "+" : "-") << ") -> " << g17(jd.weights[k]) << "\n";
        }
        out << "  sum = " << g17(weight_sum) << "\n";
        out << "  marginals: side1 +:" << g17(m1p) << " -:" << g17(m1m) << "  side2 +:"
            << g17(m2p) << " -:" << g17(m2m) << "\n";
        out << "  conditionals P(alpha|beta):\n";
        for (int alpha : {+1, -1})
            for (int gb : {+1, -1})
                out << "    P(" << (alpha > 0 ? "+" : "-") << "|" << (gb > 0 ? "+" : "-")
                    << ") = " << g17(conditional(a, b, alpha, gb)) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------------- sample

int render_sample(const RunConfig& cfg, std::ostream& out) {
    const Direction& a = *cfg.a;
    const Direction& b = *cfg.b;
    SampleOptions opt;
    opt.chunk_size = cfg.chunk_size;
    opt.workers = cfg.workers;

    RunSummary summary{a, b};
    if (!cfg.dump_path.empty()) {
        std::ofstream dump(cfg.dump_path);
        if (!dump) throw std::invalid_argument("cannot open dump file: " + cfg.dump_path);
        write_sample_csv_header(dump);
        summary = sample_run(a, b, cfg.samples, cfg.seed, opt,
                             [&dump](const SampleRecord& rec) { write_sample_csv_row(dump, rec); });
    } else {
        summary = sample_run(a, b, cfg.samples, cfg.seed, opt);
    }
    const PartitionModel partition = build_partition(a, b);
    const ZReport zr = empirical_vs_exact(summary, partition);
    const double exact = correlation(a, b);

    if (cfg.format == Format::json) {
        std::string s = "{\"command\":\"sample\",\"a\":" + dir_json(a) + ",\"b\":" + dir_json(b) +
                        ",\"n\":" + std::to_string(summary.n) +
                        ",\"seed\":" + std::to_string(summary.seed) +
                        ",\"chunk_size\":" + std::to_string(summary.chunk_size) +
                        ",\"mean_product\":" + g17(summary.mean_product) +
                        ",\"std_err\":" + g17(summary.std_err) +
                        ",\"exact_correlation\":" + g17(exact) + ",\"counts\":[";
        for (int k = 0; k < 4; ++k)
            s += (k ? "," : "") + std::to_string(summary.counts[k]);
        s += "],\"empirical_weights\":[";
        for (int k = 0; k < 4; ++k) s += (k ? "," : "") + g17(summary.empirical_weights[k]);
        s += "],\"exact_weights\":[";
        for (int k = 0; k < 4; ++k)
            s += (k ? "," : "") + g17(partition.boundaries[k + 1] - partition.boundaries[k]);
        s += "],\"z_scores\":[";
        for (int k = 0; k < 4; ++k) s += (k ? "," : "") + g17(zr.z[k]);
        s += "],\"max_abs_z\":" + g17(zr.max_abs_z) + ",\"flagged\":" + jbool(zr.flagged) +
             ",\"dump\":" + jstr(cfg.dump_path) + "}\n";
        out << s;
    } else if (cfg.format == Format::csv) {
        out << "key,value\n";
        out << "n," << summary.n << "\nseed," << summary.seed << "\nchunk_size,"
            << summary.chunk_size << "\n";
        out << "mean_product," << g17(summary.mean_product) << "\nstd_err,"
            << g17(summary.std_err) << "\nexact_correlation," << g17(exact) << "\n";
        for (int k = 0; k < 4; ++k) out << "count_k" << (k + 1) << "," << summary.counts[k] << "\n";
        for (int k = 0; k < 4; ++k)
            out << "empirical_weight_k" << (k + 1) << "," << g17(summary.empirical_weights[k])
                << "\n";
        for (int k = 0; k < 4; ++k)
            out << "z_k" << (k + 1) << "," << g17(zr.z[k]) << "\n";
        out << "max_abs_z," << g17(zr.max_abs_z) << "\nflagged," << (zr.flagged ? "1" : "0")
            << "\n";
    } else {
        out << "sample  a=" << dir_text(a) << "  b=" << dir_text(b) << "  n=" << summary.n
            << "  seed=" << summary.seed << "\n";
        out << "  mean product      = " << g17(summary.mean_product) << " +/- "
            << g6(summary.std_err) << "\n";
        out << "  exact correlation = " << g17(exact) << "\n";
        out << "  interval counts   =";
        for (int k = 0; k < 4; ++k) out << " " << summary.counts[k];
        out << "\n  weight z-scores   =";
        for (int k = 0; k < 4; ++k) out << " " << g6(zr.z[k]);
        out << "\n  max |z| = " << g6(zr.max_abs_z) << (zr.flagged ? "  (FLAGGED > 4)" : "")
            << "\n";
        if (!cfg.dump_path.empty()) out << "  records written to " << cfg.dump_path << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------------- chsh

int render_chsh(const RunConfig& cfg, std::ostream& out) {
    const ChshSetting setting{*cfg.a, *cfg.a_prime, *cfg.b, *cfg.b_prime};
    SampleOptions opt;
    opt.chunk_size = cfg.chunk_size;
    opt.workers = cfg.workers;
    const ChshResult res = chsh_sampled(setting, cfg.samples, cfg.seed, opt);
    const SampledS& sm = *res.sampled;
    // operational criterion for a demonstrated violation of the fixed-assignment
    // bound: |S| - 2 > 4 * std_err
    const bool violation = std::abs(sm.value) - 2.0 > 4.0 * sm.std_err;

    if (cfg.format == Format::json) {
        std::string s = "{\"command\":\"chsh\",\"a\":" + dir_json(setting.a) +
                        ",\"a_prime\":" + dir_json(setting.a_prime) +
                        ",\"b\":" + dir_json(setting.b) +
                        ",\"b_prime\":" + dir_json(setting.b_prime) + ",\"per_pair\":[";
        for (int i = 0; i < 4; ++i) s += (i ? "," : "") + g17(res.per_pair[i]);
        s += "],\"s_quantum\":" + g17(res.s_quantum) +
             ",\"sampled\":{\"value\":" + g17(sm.value) + ",\"std_err\":" + g17(sm.std_err) +
             ",\"n_per_pair\":" + std::to_string(sm.n_per_pair) +
             ",\"seed\":" + std::to_string(sm.seed) +
             ",\"violation_demonstrated\":" + jbool(violation) + "}}\n";
        out << s;
    } else if (cfg.format == Format::csv) {
        out << "key,value\n";
        const char* names[4] = {"c_ab", "c_ab_prime", "c_a_prime_b", "c_a_prime_b_prime"};
        for (int i = 0; i < 4; ++i) out << names[i] << "," << g17(res.per_pair[i]) << "\n";
        out << "s_quantum," << g17(res.s_quantum) << "\n";
        out << "s_sampled," << g17(sm.value) << "\nstd_err," << g17(sm.std_err)
            << "\nn_per_pair," << sm.n_per_pair << "\nseed," << sm.seed << "\n";
        out << "violation_demonstrated," << (violation ? "1" : "0") << "\n";
    } else {
        out << "chsh  a=" << dir_text(setting.a) << " a'=" << dir_text(setting.a_prime)
            << " b=" << dir_text(setting.b) << " b'=" << dir_text(setting.b_prime) << "\n";
        out << "  C(a,b)=" << g6(res.per_pair[0]) << "  C(a,b')=" << g6(res.per_pair[1])
            << "  C(a',b)=" << g6(res.per_pair[2]) << "  C(a',b')=" << g6(res.per_pair[3])
            << "\n";
        out << "  S (quantum) = " << g17(res.s_quantum) << "\n";
        out << "  S (sampled) = " << g17(sm.value) << " +/- " << g6(sm.std_err)
            << "   n_per_pair=" << sm.n_per_pair << " seed=" << sm.seed << "\n";
        out << "  |S| - 2 > 4*std_err: " << (violation ? "yes" : "no") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------------ sweep

int render_sweep(const RunConfig& cfg, std::ostream& out) {
    const SweepResult sweep = sweep_planar(cfg.step);
    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
        write_sweep_csv(file, sweep);
    }

    if (cfg.format == Format::csv && cfg.out_path.empty()) {
        write_sweep_csv(out, sweep);
        return 0;
    }
    if (cfg.format == Format::json) {
        out << "{\"command\":\"sweep\",\"step\":" << g17(sweep.step)
            << ",\"rows\":" << sweep.rows.size()
            << ",\"argmax\":{\"b_angle\":" << g17(sweep.argmax.b_angle)
            << ",\"b_prime_angle\":" << g17(sweep.argmax.b_prime_angle)
            << ",\"s\":" << g17(sweep.argmax.s) << "},\"out\":" << jstr(cfg.out_path) << "}\n";
    } else if (cfg.format == Format::csv) {
        out << "key,value\n";
        out << "step," << g17(sweep.step) << "\nrows," << sweep.rows.size() << "\n";
        out << "argmax_b_angle," << g17(sweep.argmax.b_angle) << "\nargmax_b_prime_angle,"
            << g17(sweep.argmax.b_prime_angle) << "\nargmax_s," << g17(sweep.argmax.s) << "\n";
    } else {
        out << "sweep  a=0, a'=pi/2, step=" << g6(sweep.step) << " ("
            << sweep.rows.size() << " grid points)\n";
        out << "  argmax |S| at b=" << g17(sweep.argmax.b_angle)
            << ", b'=" << g17(sweep.argmax.b_prime_angle) << ": S = " << g17(sweep.argmax.s)
            << "\n";
        if (!cfg.out_path.empty()) out << "  table written to " << cfg.out_path << "\n";
    }
    return 0;
}

Format parse_format(const std::string& text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + text);
}

}  // namespace

Direction parse_direction(const std::string& text) {
    if (text == "z") return Direction(0.0, 0.0);
    if (text == "x") return Direction(std::numbers::pi / 2.0, 0.0);
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("direction must be 'z', 'x', or 'theta,phi' in radians: " +
                                    text);
    std::size_t used_t = 0, used_p = 0;
    double theta = 0.0, phi = 0.0;
    try {
        theta = std::stod(text.substr(0, comma), &used_t);
        phi = std::stod(text.substr(comma + 1), &used_p);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse direction angles: " + text);
    }
    if (used_t != comma || used_p != text.size() - comma - 1)
        throw std::invalid_argument("trailing characters in direction: " + text);
    return Direction(theta, phi);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::verify: return render_verify(config, out);
            case Command::correlate: return render_correlate(config, out);
            case Command::probs: return render_probs(config, out);
            case Command::sample: return render_sample(config, out);
            case Command::chsh: return render_chsh(config, out);
            case Command::sweep: return render_sweep(config, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: unknown command\n";
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spin-1/2 pair correlations: exact identities, outcome "
                 "probabilities, partitioned sampling and S-value experiments"};
    app.name("spinhalf");

    std::string format_str = "text";
    app.add_option("--format", format_str, "output format: text, json or csv")
        ->capture_default_str();

    RunConfig cfg;
    std::string a_str, b_str, ap_str, bp_str, r_str = "z", preset;

    CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--trials", cfg.trials, "random trials per identity")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.verify_seed, "seed for the random inputs")
        ->capture_default_str();
    verify->add_option("--tolerance", cfg.tolerance,
                       "override the stated per-identity error bounds")
        ->check(CLI::PositiveNumber);

    CLI::App* correlate = app.add_subcommand("correlate", "correlation and its basis breakdown");
    correlate->add_option("--a", a_str, "first analyzer direction")->required();
    correlate->add_option("--b", b_str, "second analyzer direction")->required();
    correlate->add_option("--r", r_str, "reference direction for the breakdown basis")
        ->capture_default_str();

    CLI::App* probs = app.add_subcommand("probs", "joint, marginal and conditional probabilities");
    probs->add_option("--a", a_str, "first analyzer direction")->required();
    probs->add_option("--b", b_str, "second analyzer direction")->required();

    CLI::App* sample = app.add_subcommand("sample", "partitioned sampling run for one setting pair");
    sample->add_option("--a", a_str, "first analyzer direction")->required();
    sample->add_option("--b", b_str, "second analyzer direction")->required();
    sample->add_option("--samples", cfg.samples, "number of draws")
        ->required()
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", cfg.seed, "generator seed (required: runs are reproducible)")
        ->required();
    sample->add_option("--chunk-size", cfg.chunk_size, "draws per substream chunk")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sample->add_option("--workers", cfg.workers, "worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sample->add_option("--dump", cfg.dump_path, "write every record to this CSV file");

    CLI::App* chsh = app.add_subcommand("chsh", "four-pair S-value experiment");
    chsh->add_option("--preset", preset, "named setting: optimal");
    chsh->add_option("--a", a_str, "first analyzer direction");
    chsh->add_option("--a-prime", ap_str, "alternative first-side direction");
    chsh->add_option("--b", b_str, "second analyzer direction");
    chsh->add_option("--b-prime", bp_str, "alternative second-side direction");
    chsh->add_option("--samples", cfg.samples, "draws per setting pair")
        ->required()
        ->check(CLI::PositiveNumber);
    chsh->add_option("--seed", cfg.seed, "generator seed (required: runs are reproducible)")
        ->required();
    chsh->add_option("--chunk-size", cfg.chunk_size, "draws per substream chunk")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    chsh->add_option("--workers", cfg.workers, "worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    CLI::App* sweep = app.add_subcommand("sweep", "planar grid of quantum S values");
    sweep->add_option("--step", cfg.step, "grid step in radians, in (0, pi/4]")->required();
    sweep->add_option("--out", cfg.out_path, "write the CSV table to this path");

    app.require_subcommand(1);
    // let --format given after a subcommand reach the parent option
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("spinhalf");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    try {
        cfg.format = parse_format(format_str);
        if (app.got_subcommand(verify)) {
            cfg.command = Command::verify;
        } else if (app.got_subcommand(correlate)) {
            cfg.command = Command::correlate;
            cfg.a = parse_direction(a_str);
            cfg.b = parse_direction(b_str);
            cfg.r = parse_direction(r_str);
        } else if (app.got_subcommand(probs)) {
            cfg.command = Command::probs;
            cfg.a = parse_direction(a_str);
            cfg.b = parse_direction(b_str);
        } else if (app.got_subcommand(sample)) {
            cfg.command = Command::sample;
            cfg.a = parse_direction(a_str);
            cfg.b = parse_direction(b_str);
        } else if (app.got_subcommand(chsh)) {
            cfg.command = Command::chsh;
            if (!preset.empty()) {
                if (preset != "optimal")
                    throw std::invalid_argument("unknown preset: " + preset);
                const ChshSetting s = optimal_setting();
                cfg.a = s.a;
                cfg.a_prime = s.a_prime;
                cfg.b = s.b;
                cfg.b_prime = s.b_prime;
            } else {
                if (a_str.empty() || ap_str.empty() || b_str.empty() || bp_str.empty())
                    throw std::invalid_argument(
                        "chsh needs --preset or all of --a --a-prime --b --b-prime");
                cfg.a = parse_direction(a_str);
                cfg.a_prime = parse_direction(ap_str);
                cfg.b = parse_direction(b_str);
                cfg.b_prime = parse_direction(bp_str);
            }
        } else if (app.got_subcommand(sweep)) {
            cfg.command = Command::sweep;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    return run(cfg, out, err);
}

}  // namespace spinhalf::cli
