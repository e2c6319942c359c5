#include "rksolve/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rksolve/errors.hpp"
#include "rksolve/eval.hpp"

namespace rksolve {

std::string format_number(double value) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

SolutionTable build_table(const Trajectory& traj, const Expr& exact) {
    check_variables(exact, {"x"});

    SolutionTable table;
    table.h = traj.h;
    table.has_z = traj.has_z();
    table.rows.reserve(traj.xs.size());
    for (std::size_t i = 0; i < traj.xs.size(); ++i) {
        Environment env{{"x", traj.xs[i]}};
        const double y_exact = evaluate(exact, env);
        SolutionRow row{traj.xs[i], traj.ys[i], y_exact, std::abs(y_exact - traj.ys[i]),
                        std::nullopt};
        if (table.has_z) {
            row.z_approx = traj.zs[i];
        }
        table.rows.push_back(row);
    }
    return table;
}

std::size_t write_csv(const SolutionTable& table, std::ostream& out) {
    out << "X,Y_Approximate,Y_Exact,Absolute_Error";
    if (table.has_z) {
        out << ",Z_Approximate";
    }
    out << '\n';
    for (const SolutionRow& row : table.rows) {
        out << format_number(row.x) << ',' << format_number(row.y_approx) << ','
            << format_number(row.y_exact) << ',' << format_number(row.abs_error);
        if (table.has_z) {
            out << ',' << format_number(row.z_approx.value());
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing CSV output");
    }
    return table.rows.size();
}

}  // namespace rksolve
