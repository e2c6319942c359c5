#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rksolve/solver.hpp"

namespace rksolve {

struct RunConfig {
    double x0 = 0.0;
    double y0 = 0.0;
    std::optional<double> z0;
    std::size_t steps = 0;
    std::string f;
    std::optional<std::string> g;  // second function, required for order 2
    double x_bar = 0.0;
    std::string exact;
    int ode_order = 1;  // 1 or 2
    Method method = Method::Rk4;
    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;
};

/// Thrown by parse_args for -h/--help; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Maps command-line flags onto a RunConfig. `args` excludes the program
/// name. Throws UsageError for a missing required flag, an unparsable
/// number, steps < 1, order 2 without --z0/--g, or a non-rk4 method with
/// order 2.
RunConfig parse_args(const std::vector<std::string>& args);

/// Full pipeline: parse the expressions, solve, build the table, write CSV
/// to csv_path (or `out` when absent) and SVG to svg_path (when present),
/// then print a one-line summary (h, rows, max absolute error) to `err`.
/// Returns 0 on success and 1 on any parse/evaluation/solve/I-O failure,
/// with the diagnostic on `err`. No output file survives a failed run.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rksolve
