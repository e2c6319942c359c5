#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rksolve/ast.hpp"

namespace rksolve {

/// Variable bindings for evaluation. Every bound value is finite.
class Environment {
public:
    Environment() = default;
    Environment(std::initializer_list<std::pair<std::string, double>> bindings);

    /// Binds or rebinds a variable. Throws std::invalid_argument for a
    /// non-finite value.
    void bind(std::string name, double value);

    /// Returns the bound value, or nullptr when unbound.
    const double* lookup(std::string_view name) const noexcept;

private:
    std::vector<std::pair<std::string, double>> bindings_;
};

/// Evaluates the tree to a finite real. Const(e) is Euler's number and
/// Const(pi) is pi; log is natural and the trigonometric functions take
/// radians. Throws UnboundVariable for a variable missing from `env` and
/// DomainError for division by zero, log of a non-positive value, a
/// fractional power of a negative base, or any non-finite intermediate.
double evaluate(const Expr& expr, const Environment& env);

/// The Var names occurring in `expr`; constants e/pi are not included.
std::set<std::string> free_variables(const Expr& expr);

/// Throws DisallowedVariable naming the leftmost variable of `expr` that is
/// not in `allowed`.
void check_variables(const Expr& expr, const std::set<std::string>& allowed);

}  // namespace rksolve
