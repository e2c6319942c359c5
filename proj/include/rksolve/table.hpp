#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rksolve/ast.hpp"
#include "rksolve/solver.hpp"

namespace rksolve {

struct SolutionRow {
    double x;
    double y_approx;
    double y_exact;
    double abs_error;  // |y_exact - y_approx|
    std::optional<double> z_approx;
};

struct SolutionTable {
    std::vector<SolutionRow> rows;  // x strictly increasing
    double h = 0.0;
    bool has_z = false;
};

/// One row per trajectory point, with y_exact = exact(x_i) and
/// abs_error = |y_exact - y_approx|. `exact` must be a function of x only;
/// evaluator errors propagate.
SolutionTable build_table(const Trajectory& traj, const Expr& exact);

/// Emits the header `X,Y_Approximate,Y_Exact,Absolute_Error` (plus
/// `,Z_Approximate` when the table carries z), then one line per row, each
/// terminated by a single line feed. Returns the number of data rows
/// written. Throws std::runtime_error when the sink fails.
std::size_t write_csv(const SolutionTable& table, std::ostream& out);

/// Shortest decimal text that converts back to exactly `value`.
std::string format_number(double value);

}  // namespace rksolve
