#pragma once

#include <map>
#include <string>
#include <vector>

#include "planch/grid.hpp"

namespace planch {

/**
 * Run configuration shared by the verification suites and the CLI.
 * Tolerance overrides are keyed "<suite>.<check>" (e.g. "fourier.eigen").
 */
struct RunConfig {
    double grid_half_width = 12.0;       // T
    std::size_t grid_points = 1024;      // N
    std::size_t basis_size = 48;         // N_h
    std::size_t mellin_points = 4096;    // M
    std::map<std::string, double> tolerance_overrides;

    void validate() const;
    UniformGrid uniform_grid() const;
    LogGrid log_grid() const;

    /// Largest basis size the grid resolves (orthonormality restorable by
    /// one re-orthonormalization sweep); 64 on the default grid.
    std::size_t max_basis_size() const;
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  // optional measured constants etc.
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

struct VerifyReport {
    RunConfig config;
    std::vector<SuiteReport> suites;
    bool all_pass() const;
};

/// Suites: "gamma", "ladder", "fourier", "eigenspace", "mellin", "hardy".
const std::vector<std::string>& suite_names();

/// Runs one named suite under the configuration.
SuiteReport run_suite(const std::string& suite, const RunConfig& config);

/// Runs the given suites ("all" expands to every suite).
VerifyReport run_verification(const std::vector<std::string>& suites,
                              const RunConfig& config);

/// Deterministic JSON rendering of a report (stable key order; identical
/// runs produce byte-identical output).
std::string report_to_json(const VerifyReport& report);

}  // namespace planch
