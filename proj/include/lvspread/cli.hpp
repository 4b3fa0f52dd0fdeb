#pragma once

#include "lvspread/model.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace lvspread::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kNumericalFailure = 2,
    kInconclusive = 3,
};

struct SimSettings {
    double L = 400.0;
    int nx = 4001;
    double t_end = 200.0;
    double cfl_safety = 0.4;
    double threshold_frac = 0.1;
    double x0 = 50.0;
    std::string boundary = "neumann"; // or "dirichlet"
};

struct RunConfig {
    ModelParams params;
    std::optional<MutationScaling> scaling; // set when the file gives mu, e, d
    SimSettings sim;
};

/// Strict parse of the JSON config text; throws ValidationError.
RunConfig parse_config(const std::string& json_text);
/// Reads and parses a config file; throws ValidationError.
RunConfig load_config(const std::string& path);

/// Entry point for the lvspread executable. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lvspread::cli
