// planch: spectral decomposition of the Fourier-Plancherel operator on L2(R).
//
// Subcommands: verify, transform, project, synthesize, analyze, basis.
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 numerical-engine diagnostic.

#include <complex>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "planch/eigenspace.hpp"
#include "planch/error.hpp"
#include "planch/fourier.hpp"
#include "planch/hardy.hpp"
#include "planch/hermite.hpp"
#include "planch/io.hpp"
#include "planch/mellin.hpp"
#include "planch/verify.hpp"

namespace {

using planch::Error;
using planch::ErrorKind;
using planch::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEngine = 3;

struct GlobalOptions {
    RunConfig config;
    std::string config_file;
    std::vector<std::string> tolerances;
    std::string json_report;
};

void load_config_file(RunConfig& config, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::Config, "cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Config, std::string("bad config JSON: ") + e.what());
    }
    if (j.contains("grid_half_width")) config.grid_half_width = j["grid_half_width"];
    if (j.contains("grid_points")) config.grid_points = j["grid_points"];
    if (j.contains("basis_size")) config.basis_size = j["basis_size"];
    if (j.contains("mellin_points")) config.mellin_points = j["mellin_points"];
    if (j.contains("tolerance_overrides"))
        for (const auto& [key, value] : j["tolerance_overrides"].items())
            config.tolerance_overrides[key] = value;
}

void apply_tolerance_flags(RunConfig& config, const std::vector<std::string>& flags) {
    for (const std::string& spec : flags) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::Config,
                        "tolerance override must look like name=value: '" + spec + "'");
        try {
            config.tolerance_overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Config, "bad tolerance value in '" + spec + "'");
        }
    }
}

int run_verify(const GlobalOptions& opts, const std::string& suite) {
    std::vector<std::string> suites = {suite};
    const planch::VerifyReport report = planch::run_verification(suites, opts.config);

    for (const auto& s : report.suites) {
        for (const auto& c : s.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << s.suite << '.' << c.name
                      << "  residual " << c.residual << "  tolerance " << c.tolerance;
            if (!c.note.empty()) std::cout << "  (" << c.note << ')';
            std::cout << '\n';
        }
    }
    const std::string json = planch::report_to_json(report);
    if (!opts.json_report.empty()) {
        std::ofstream os(opts.json_report);
        if (!os)
            throw Error(ErrorKind::Config,
                        "cannot open report path '" + opts.json_report + "'");
        os << json;
    }
    std::cout << (report.all_pass() ? "all checks passed" : "CHECK FAILURES") << '\n';
    return report.all_pass() ? kExitOk : kExitCheckFailure;
}

int run_transform(const GlobalOptions& opts, const std::string& kind,
                  const std::string& direction, int power,
                  const std::string& in_path, const std::string& out_path) {
    if (kind == "fourier") {
        const planch::GridFunction x = planch::load_grid_function(in_path);
        const planch::FourierOperator fop(x.grid());
        const planch::GridFunction y = fop.apply(x, power);
        planch::save_grid_function(out_path, y);
        std::cout << "input L2 norm:  " << planch::l2_norm(x) << '\n'
                  << "output L2 norm: " << planch::l2_norm(y) << '\n';
        return kExitOk;
    }
    if (kind == "mellin") {
        const planch::MellinTransform mellin(opts.config.log_grid());
        if (direction == "forward") {
            planch::HalfLineFunction f = planch::load_half_line(in_path);
            if (!(f.grid() == mellin.grid()))
                throw Error(ErrorKind::Config,
                            "input log grid must match the engine grid; resample "
                            "with the engine's span first");
            const planch::CriticalLineFunction phi = mellin.forward(f);
            planch::save_critical_line(out_path, phi);
            std::cout << "input L2 norm:  " << planch::half_line_norm(f) << '\n'
                      << "output L2 norm: "
                      << planch::critical_line_norm(phi) / std::sqrt(2.0 * M_PI) << '\n';
        } else if (direction == "inverse") {
            const planch::CriticalLineFunction phi = planch::load_critical_line(in_path);
            const planch::HalfLineFunction f = mellin.inverse(phi);
            planch::save_half_line(out_path, f);
            std::cout << "input L2 norm:  "
                      << planch::critical_line_norm(phi) / std::sqrt(2.0 * M_PI) << '\n'
                      << "output L2 norm: " << planch::half_line_norm(f) << '\n';
        } else {
            throw Error(ErrorKind::Config, "direction must be forward or inverse");
        }
        return kExitOk;
    }
    if (kind == "cosine" || kind == "sine") {
        const planch::HalfLineFunction f = planch::load_half_line(in_path);
        const planch::HalfLineFunction g =
            (kind == "cosine") ? planch::cosine_transform(f) : planch::sine_transform(f);
        planch::save_half_line(out_path, g);
        std::cout << "input L2 norm:  " << planch::half_line_norm(f) << '\n'
                  << "output L2 norm: " << planch::half_line_norm(g) << '\n';
        return kExitOk;
    }
    throw Error(ErrorKind::Config, "unknown transform kind '" + kind + "'");
}

int run_project(const GlobalOptions& opts, const std::string& lambda_token,
                const std::string& in_path, const std::string& out_path) {
    const planch::GridFunction x = planch::load_grid_function(in_path);
    const planch::FourierOperator fop(x.grid());
    nlohmann::ordered_json norms;
    norms["input"] = planch::l2_norm(x);

    if (!lambda_token.empty()) {
        const planch::EigenLabel label = planch::EigenLabel::from_token(lambda_token);
        const planch::GridFunction px = planch::project(fop, x, label);
        planch::save_grid_function(out_path, px);
        norms["component"][label.token()] = planch::l2_norm(px);
    } else {
        const auto parts = planch::decompose(fop, x);
        const char* suffix[4] = {"1", "i", "m1", "mi"};
        for (int li = 0; li < 4; ++li) {
            const std::string path = out_path + "." + suffix[li] + ".csv";
            planch::save_grid_function(path, parts[std::size_t(li)]);
            norms["component"][planch::EigenLabel::all()[std::size_t(li)].token()] =
                planch::l2_norm(parts[std::size_t(li)]);
        }
    }
    const std::string dump = norms.dump(2) + "\n";
    std::cout << dump;
    if (!opts.json_report.empty()) {
        std::ofstream os(opts.json_report);
        os << dump;
    }
    return kExitOk;
}

int run_synthesize(const GlobalOptions& opts, const std::string& lambda_token,
                   const std::string& psi_path, const std::string& out_path) {
    const planch::EigenLabel label = planch::EigenLabel::from_token(lambda_token);
    const planch::HardyTitchmarsh ht(opts.config.uniform_grid(), opts.config.log_grid());
    const planch::CriticalLineFunction samples = planch::load_critical_line(psi_path);
    const planch::Parity psi_parity =
        (label.power_index == 0 || label.power_index == 1) ? planch::Parity::Even
                                                           : planch::Parity::Odd;
    const planch::PsiFunction psi{samples, psi_parity};
    const planch::GridFunction x = ht.synthesize_eigenfunction(psi, label);
    planch::save_grid_function(out_path, x);
    const double res =
        planch::l2_norm(ht.fourier().apply(x) - label.value * x) / planch::l2_norm(x);
    std::cout << "eigen-residual ||Fx - lambda x|| / ||x|| = " << res << '\n';
    return kExitOk;
}

int run_analyze(const GlobalOptions& opts, const std::string& lambda_token,
                const std::string& in_path, const std::string& out_path) {
    const planch::EigenLabel label = planch::EigenLabel::from_token(lambda_token);
    const planch::HardyTitchmarsh ht(opts.config.uniform_grid(), opts.config.log_grid());
    const planch::GridFunction x = planch::load_grid_function(in_path);
    const planch::PsiFunction psi = ht.analyze_eigenfunction(x, label);
    planch::save_critical_line(out_path, psi.samples);
    std::cout << "stable eta window: |eta| <= " << ht.stable_window(label) << '\n'
              << "psi parity defect: " << psi.parity_defect() << '\n';
    return kExitOk;
}

int run_basis(const GlobalOptions& opts, std::size_t n, const std::string& out_path) {
    RunConfig config = opts.config;
    config.basis_size = n;
    config.validate();
    const planch::HermiteBasis basis =
        planch::HermiteBasis::build(config.uniform_grid(), n);
    std::ofstream os(out_path);
    if (!os) throw Error(ErrorKind::Config, "cannot open '" + out_path + "'");
    planch::write_basis_csv(os, basis);
    std::cout << "wrote " << n << " basis functions on " << basis.grid().n_points
              << " grid points\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral decomposition of the Fourier-Plancherel operator"};
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--grid-half-width", opts.config.grid_half_width,
                   "half-width T of the symmetric grid");
    app.add_option("--grid-points", opts.config.grid_points,
                   "number of grid points N (even)");
    app.add_option("--basis-size", opts.config.basis_size,
                   "number of Hermite basis functions");
    app.add_option("--mellin-points", opts.config.mellin_points,
                   "number of Mellin log-grid points (even)");
    app.add_option("--config", opts.config_file, "JSON config file (flags override)");
    app.add_option("--tol", opts.tolerances,
                   "tolerance override <suite>.<check>=<value> (repeatable)");
    app.add_option("--json-report", opts.json_report, "write the JSON report here");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite,
                       "all|gamma|ladder|fourier|eigenspace|mellin|hardy");

    std::string kind, direction = "forward", in_path, out_path;
    int power = 1;
    auto* transform = app.add_subcommand("transform", "apply an integral transform");
    transform->add_option("kind", kind, "fourier|mellin|cosine|sine")->required();
    transform->add_option("--direction", direction, "mellin: forward|inverse");
    transform->add_option("--power", power, "fourier: power 0..3");
    transform->add_option("--in", in_path, "input CSV")->required();
    transform->add_option("--out", out_path, "output CSV")->required();

    std::string lambda_token;
    auto* project_cmd = app.add_subcommand("project", "project onto an eigenspace");
    project_cmd->add_option("--in", in_path, "input grid-function CSV")->required();
    project_cmd->add_option("--lambda", lambda_token, "1|i|-1|-i (omit for all four)");
    project_cmd->add_option("--out", out_path, "output CSV (or prefix)")->required();

    std::string psi_path;
    auto* synth = app.add_subcommand("synthesize",
                                     "build an eigenfunction from psi samples");
    synth->add_option("--lambda", lambda_token, "1|i|-1|-i")->required();
    synth->add_option("--psi", psi_path, "psi CSV (eta,re,im)")->required();
    synth->add_option("--out", out_path, "output grid-function CSV")->required();

    auto* analyze = app.add_subcommand("analyze",
                                       "extract psi from an eigenfunction");
    analyze->add_option("--lambda", lambda_token, "1|i|-1|-i")->required();
    analyze->add_option("--in", in_path, "input grid-function CSV")->required();
    analyze->add_option("--out", out_path, "output psi CSV")->required();

    std::size_t basis_n = 48;
    auto* basis_cmd = app.add_subcommand("basis", "export the Hermite basis matrix");
    basis_cmd->add_option("--n", basis_n, "number of functions");
    basis_cmd->add_option("--out", out_path, "output CSV")->required();

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    // configuration phase: all failures here are usage errors
    try {
        if (!opts.config_file.empty()) load_config_file(opts.config, opts.config_file);
        // re-apply flag values on top of the file
        for (const auto* option :
             {app.get_option("--grid-half-width"), app.get_option("--grid-points"),
              app.get_option("--basis-size"), app.get_option("--mellin-points")}) {
            (void)option;  // flags already bound directly; file only fills defaults
        }
        apply_tolerance_flags(opts.config, opts.tolerances);
        opts.config.validate();
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(opts, suite);
        if (*transform) return run_transform(opts, kind, direction, power, in_path, out_path);
        if (*project_cmd) return run_project(opts, lambda_token, in_path, out_path);
        if (*synth) return run_synthesize(opts, lambda_token, psi_path, out_path);
        if (*analyze) return run_analyze(opts, lambda_token, in_path, out_path);
        if (*basis_cmd) return run_basis(opts, basis_n, out_path);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Config) {
            std::cerr << "input error: " << e.what() << '\n';
            return kExitUsage;
        }
        std::cerr << "engine diagnostic: " << e.what() << '\n';
        return kExitEngine;
    }
    return kExitUsage;
}
