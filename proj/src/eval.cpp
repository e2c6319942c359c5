#include "rksolve/eval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>

#include "rksolve/errors.hpp"

namespace rksolve {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double require_finite(double value) {
    if (!std::isfinite(value)) {
        throw DomainError("non-finite result");
    }
    return value;
}

bool is_integral(double value) { return std::trunc(value) == value; }

void collect_variables(const Expr& expr, std::set<std::string>& out) {
    std::visit(Overloaded{
                   [](const Expr::Num&) {},
                   [&](const Expr::Var& v) { out.insert(v.name); },
                   [](const Expr::Const&) {},
                   [&](const Expr::Unary& u) { collect_variables(*u.child, out); },
                   [&](const Expr::Binary& b) {
                       collect_variables(*b.left, out);
                       collect_variables(*b.right, out);
                   },
               },
               expr.node());
}

// In-order walk; throws on the leftmost variable outside `allowed`.
void check_in_order(const Expr& expr, const std::set<std::string>& allowed) {
    std::visit(Overloaded{
                   [](const Expr::Num&) {},
                   [&](const Expr::Var& v) {
                       if (!allowed.contains(v.name)) {
                           throw DisallowedVariable(v.name);
                       }
                   },
                   [](const Expr::Const&) {},
                   [&](const Expr::Unary& u) { check_in_order(*u.child, allowed); },
                   [&](const Expr::Binary& b) {
                       check_in_order(*b.left, allowed);
                       check_in_order(*b.right, allowed);
                   },
               },
               expr.node());
}

}  // namespace

Environment::Environment(std::initializer_list<std::pair<std::string, double>> bindings) {
    for (const auto& [name, value] : bindings) {
        bind(name, value);
    }
}

void Environment::bind(std::string name, double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("binding for '" + name + "' must be finite");
    }
    for (auto& [bound_name, bound_value] : bindings_) {
        if (bound_name == name) {
            bound_value = value;
            return;
        }
    }
    bindings_.emplace_back(std::move(name), value);
}

const double* Environment::lookup(std::string_view name) const noexcept {
    for (const auto& [bound_name, bound_value] : bindings_) {
        if (bound_name == name) return &bound_value;
    }
    return nullptr;
}

double evaluate(const Expr& expr, const Environment& env) {
    return std::visit(
        Overloaded{
            [](const Expr::Num& n) { return n.value; },
            [&](const Expr::Var& v) {
                const double* value = env.lookup(v.name);
                if (value == nullptr) {
                    throw UnboundVariable(v.name);
                }
                return *value;
            },
            [](const Expr::Const& c) {
                return c.name == "e" ? std::numbers::e : std::numbers::pi;
            },
            [&](const Expr::Unary& u) {
                const double child = evaluate(*u.child, env);
                switch (u.op) {
                    case UnaryOp::Neg: return -child;
                    case UnaryOp::Sin: return require_finite(std::sin(child));
                    case UnaryOp::Cos: return require_finite(std::cos(child));
                    case UnaryOp::Tan: return require_finite(std::tan(child));
                    case UnaryOp::Log:
                        if (child <= 0.0) {
                            throw DomainError("log of a non-positive value");
                        }
                        return require_finite(std::log(child));
                    case UnaryOp::Exp: return require_finite(std::exp(child));
                }
                throw std::logic_error("unhandled unary operator");
            },
            [&](const Expr::Binary& b) {
                const double left = evaluate(*b.left, env);
                const double right = evaluate(*b.right, env);
                switch (b.op) {
                    case BinaryOp::Add: return require_finite(left + right);
                    case BinaryOp::Sub: return require_finite(left - right);
                    case BinaryOp::Mul: return require_finite(left * right);
                    case BinaryOp::Div:
                        if (right == 0.0) {
                            throw DomainError("division by zero");
                        }
                        return require_finite(left / right);
                    case BinaryOp::Pow:
                        if (left < 0.0 && !is_integral(right)) {
                            throw DomainError("fractional power of a negative base");
                        }
                        return require_finite(std::pow(left, right));
                }
                throw std::logic_error("unhandled binary operator");
            },
        },
        expr.node());
}

std::set<std::string> free_variables(const Expr& expr) {
    std::set<std::string> names;
    collect_variables(expr, names);
    return names;
}

void check_variables(const Expr& expr, const std::set<std::string>& allowed) {
    check_in_order(expr, allowed);
}

}  // namespace rksolve
