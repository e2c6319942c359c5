#include "rksolve/solver.hpp"

#include <cmath>
#include <string>

#include "rksolve/errors.hpp"
#include "rksolve/eval.hpp"

namespace rksolve {

namespace {

double eval_xy(const Expr& f, double x, double y) {
    Environment env{{"x", x}, {"y", y}};
    return evaluate(f, env);
}

double eval_xyz(const Expr& f, double x, double y, double z) {
    Environment env{{"x", x}, {"y", y}, {"z", z}};
    return evaluate(f, env);
}

// Rethrows the in-flight evaluator error with the failing stage named.
[[noreturn]] void rethrow_tagged(const std::string& stage) {
    try {
        throw;
    } catch (const UnboundVariable& e) {
        throw UnboundVariable(e.name(), "stage " + stage);
    } catch (const DomainError& e) {
        throw DomainError("stage " + stage + ": " + e.what());
    }
}

double stage_xy(const Expr& f, double x, double y, const char* stage) {
    try {
        return eval_xy(f, x, y);
    } catch (const EvalError&) {
        rethrow_tagged(stage);
    }
}

double stage_xyz(const Expr& f, double x, double y, double z, const std::string& stage) {
    try {
        return eval_xyz(f, x, y, z);
    } catch (const EvalError&) {
        rethrow_tagged(stage);
    }
}

}  // namespace

const char* method_name(Method method) {
    switch (method) {
        case Method::Euler: return "euler";
        case Method::Rk2: return "rk2";
        case Method::Rk3: return "rk3";
        case Method::Rk4: return "rk4";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "euler") return Method::Euler;
    if (name == "rk2") return Method::Rk2;
    if (name == "rk3") return Method::Rk3;
    if (name == "rk4") return Method::Rk4;
    return std::nullopt;
}

double step_size(double x0, double x_bar, std::size_t steps) {
    if (steps < 1) {
        throw InvalidSteps("steps must be at least 1");
    }
    if (!(x_bar > x0)) {
        throw InvalidRange("endpoint must be greater than the initial x");
    }
    return (x_bar - x0) / static_cast<double>(steps);
}

double euler_step(const Expr& f, double x, double y, double h) {
    return y + h * eval_xy(f, x, y);
}

double rk2_step(const Expr& f, double x, double y, double h) {
    const double k1 = h * eval_xy(f, x, y);
    const double k2 = h * eval_xy(f, x + h, y + k1);
    return y + (k1 + k2) / 2.0;
}

double rk3_step(const Expr& f, double x, double y, double h) {
    const double k1 = h * eval_xy(f, x, y);
    const double k2 = h * eval_xy(f, x + h / 2.0, y + k1 / 2.0);
    const double k3 = h * eval_xy(f, x + h, y + k1);
    return y + (k1 + 4.0 * k2 + k3) / 6.0;
}

Rk4Result rk4_step(const Expr& f, double x, double y, double h) {
    const double k1 = h * stage_xy(f, x, y, "k1");
    const double k2 = h * stage_xy(f, x + h / 2.0, y + k1 / 2.0, "k2");
    const double k3 = h * stage_xy(f, x + h / 2.0, y + k2 / 2.0, "k3");
    const double k4 = h * stage_xy(f, x + h, y + k3, "k4");
    const double y_next = y + k1 / 6.0 + k2 / 3.0 + k3 / 3.0 + k4 / 6.0;
    return {y_next, {{k1, k2, k3, k4}, {}}};
}

Rk4SecondResult rk4_step_second(const Expr& f1, const Expr& f2, double x, double y, double z,
                                double h) {
    const double k1 = h * stage_xyz(f1, x, y, z, "k1 (f1)");
    const double l1 = h * stage_xyz(f2, x, y, z, "l1 (f2)");
    const double k2 = h * stage_xyz(f1, x + h / 2.0, y + k1 / 2.0, z + l1 / 2.0, "k2 (f1)");
    const double l2 = h * stage_xyz(f2, x + h / 2.0, y + k1 / 2.0, z + l1 / 2.0, "l2 (f2)");
    const double k3 = h * stage_xyz(f1, x + h / 2.0, y + k2 / 2.0, z + l2 / 2.0, "k3 (f1)");
    const double l3 = h * stage_xyz(f2, x + h / 2.0, y + k2 / 2.0, z + l2 / 2.0, "l3 (f2)");
    const double k4 = h * stage_xyz(f1, x + h, y + k3, z + l3, "k4 (f1)");
    const double l4 = h * stage_xyz(f2, x + h, y + k3, z + l3, "l4 (f2)");
    const double y_next = y + k1 / 6.0 + k2 / 3.0 + k3 / 3.0 + k4 / 6.0;
    const double z_next = z + l1 / 6.0 + l2 / 3.0 + l3 / 3.0 + l4 / 6.0;
    return {y_next, z_next, {{k1, k2, k3, k4}, {l1, l2, l3, l4}}};
}

Trajectory solve_first(const FirstOrderProblem& problem, Method method) {
    const double h = step_size(problem.x0, problem.x_bar, problem.steps);
    check_variables(*problem.f, {"x", "y"});

    Trajectory traj;
    traj.h = h;
    traj.xs.resize(problem.steps + 1);
    traj.ys.resize(problem.steps + 1);
    for (std::size_t i = 0; i <= problem.steps; ++i) {
        traj.xs[i] = problem.x0 + static_cast<double>(i) * h;
    }
    traj.ys[0] = problem.y0;

    for (std::size_t n = 0; n < problem.steps; ++n) {
        try {
            switch (method) {
                case Method::Euler:
                    traj.ys[n + 1] = euler_step(*problem.f, traj.xs[n], traj.ys[n], h);
                    break;
                case Method::Rk2:
                    traj.ys[n + 1] = rk2_step(*problem.f, traj.xs[n], traj.ys[n], h);
                    break;
                case Method::Rk3:
                    traj.ys[n + 1] = rk3_step(*problem.f, traj.xs[n], traj.ys[n], h);
                    break;
                case Method::Rk4:
                    traj.ys[n + 1] = rk4_step(*problem.f, traj.xs[n], traj.ys[n], h).y_next;
                    break;
            }
        } catch (const EvalError& e) {
            throw SolveError(n, e.what());
        }
    }
    return traj;
}

Trajectory solve_second(const SecondOrderProblem& problem) {
    const double h = step_size(problem.x0, problem.x_bar, problem.steps);
    check_variables(*problem.f1, {"x", "y", "z"});
    check_variables(*problem.f2, {"x", "y", "z"});

    Trajectory traj;
    traj.h = h;
    traj.xs.resize(problem.steps + 1);
    traj.ys.resize(problem.steps + 1);
    traj.zs.resize(problem.steps + 1);
    for (std::size_t i = 0; i <= problem.steps; ++i) {
        traj.xs[i] = problem.x0 + static_cast<double>(i) * h;
    }
    traj.ys[0] = problem.y0;
    traj.zs[0] = problem.z0;

    for (std::size_t n = 0; n < problem.steps; ++n) {
        try {
            const Rk4SecondResult result =
                rk4_step_second(*problem.f1, *problem.f2, traj.xs[n], traj.ys[n], traj.zs[n], h);
            traj.ys[n + 1] = result.y_next;
            traj.zs[n + 1] = result.z_next;
        } catch (const EvalError& e) {
            throw SolveError(n, e.what());
        }
    }
    return traj;
}

double estimate_order(const FirstOrderProblem& problem, Method method, const Expr& exact) {
    check_variables(exact, {"x"});

    const auto max_grid_error = [&](std::size_t steps) {
        FirstOrderProblem refined = problem;
        refined.steps = steps;
        const Trajectory traj = solve_first(refined, method);
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.xs.size(); ++i) {
            Environment env{{"x", traj.xs[i]}};
            worst = std::max(worst, std::abs(evaluate(exact, env) - traj.ys[i]));
        }
        return worst;
    };

    const double coarse = max_grid_error(problem.steps);
    const double fine = max_grid_error(problem.steps * 2);
    if (coarse < 1e-13 || fine < 1e-13) {
        throw DegenerateError("grid error too small to measure a convergence order");
    }
    return std::log2(coarse / fine);
}

}  // namespace rksolve
