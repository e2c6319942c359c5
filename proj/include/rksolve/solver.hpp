#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rksolve/ast.hpp"

namespace rksolve {

enum class Method { Euler, Rk2, Rk3, Rk4 };

const char* method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

/// y' = f(x, y), y(x0) = y0, integrated forward to x_bar in `steps` fixed
/// steps.
struct FirstOrderProblem {
    ExprPtr f;  // over {x, y}
    double x0 = 0.0;
    double y0 = 0.0;
    double x_bar = 0.0;
    std::size_t steps = 0;
};

/// y' = f1(x, y, z), z' = f2(x, y, z) with z = y', the coupled reduction of
/// a second-order equation.
struct SecondOrderProblem {
    ExprPtr f1;  // over {x, y, z}
    ExprPtr f2;  // over {x, y, z}
    double x0 = 0.0;
    double y0 = 0.0;
    double z0 = 0.0;
    double x_bar = 0.0;
    std::size_t steps = 0;
};

/// Stage values of one fourth-order step; `l` is filled only for the coupled
/// second-order form.
struct RkStages {
    std::vector<double> k;
    std::vector<double> l;
};

struct Trajectory {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> zs;  // empty for first-order problems
    double h = 0.0;

    bool has_z() const noexcept { return !zs.empty(); }
};

/// (x_bar - x0) / steps. Throws InvalidSteps when steps < 1 and InvalidRange
/// when x_bar <= x0.
double step_size(double x0, double x_bar, std::size_t steps);

// Single-step kernels. Each advances y by one step of size h > 0 and
// propagates evaluator errors; the fourth-order kernels tag the failing
// stage (k1..k4, l1..l4).
double euler_step(const Expr& f, double x, double y, double h);
double rk2_step(const Expr& f, double x, double y, double h);
double rk3_step(const Expr& f, double x, double y, double h);

struct Rk4Result {
    double y_next;
    RkStages stages;
};
Rk4Result rk4_step(const Expr& f, double x, double y, double h);

struct Rk4SecondResult {
    double y_next;
    double z_next;
    RkStages stages;
};
Rk4SecondResult rk4_step_second(const Expr& f1, const Expr& f2, double x, double y, double z,
                                double h);

/// Iterates the chosen kernel over the fixed grid x_i = x0 + i*h. The
/// trajectory has steps+1 entries. Throws SolveError wrapping the evaluator
/// failure and the step index; no partial trajectory is returned.
Trajectory solve_first(const FirstOrderProblem& problem, Method method);

/// As solve_first with the coupled fourth-order kernel; the trajectory
/// carries both ys and zs.
Trajectory solve_second(const SecondOrderProblem& problem);

/// Empirical convergence order: solves with problem.steps and twice that,
/// and returns log2 of the ratio of maximum grid errors against `exact`
/// (a function of x only). Throws DegenerateError when either error is
/// below 1e-13.
double estimate_order(const FirstOrderProblem& problem, Method method, const Expr& exact);

}  // namespace rksolve
