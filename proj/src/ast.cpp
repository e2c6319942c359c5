#include "rksolve/ast.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace rksolve {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Sin: return "sin";
        case UnaryOp::Cos: return "cos";
        case UnaryOp::Tan: return "tan";
        case UnaryOp::Log: return "log";
        case UnaryOp::Exp: return "exp";
    }
    return "?";
}

char binary_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return '+';
        case BinaryOp::Sub: return '-';
        case BinaryOp::Mul: return '*';
        case BinaryOp::Div: return '/';
        case BinaryOp::Pow: return '^';
    }
    return '?';
}

std::string number_text(double value) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

}  // namespace

ExprPtr make_num(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("numeric literal must be finite");
    }
    return std::make_shared<const Expr>(Expr::Num{value});
}

ExprPtr make_var(std::string name) {
    if (name.empty()) {
        throw std::invalid_argument("variable name must be non-empty");
    }
    return std::make_shared<const Expr>(Expr::Var{std::move(name)});
}

ExprPtr make_const(std::string name) {
    if (name != "e" && name != "pi") {
        throw std::invalid_argument("unknown constant '" + name + "'");
    }
    return std::make_shared<const Expr>(Expr::Const{std::move(name)});
}

ExprPtr make_unary(UnaryOp op, ExprPtr child) {
    if (!child) {
        throw std::invalid_argument("unary operand must be non-null");
    }
    return std::make_shared<const Expr>(Expr::Unary{op, std::move(child)});
}

ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right) {
    if (!left || !right) {
        throw std::invalid_argument("binary operands must be non-null");
    }
    return std::make_shared<const Expr>(Expr::Binary{op, std::move(left), std::move(right)});
}

bool structurally_equal(const Expr& a, const Expr& b) {
    return std::visit(
        Overloaded{
            [&](const Expr::Num& lhs) {
                const auto* rhs = std::get_if<Expr::Num>(&b.node());
                return rhs != nullptr && lhs.value == rhs->value;
            },
            [&](const Expr::Var& lhs) {
                const auto* rhs = std::get_if<Expr::Var>(&b.node());
                return rhs != nullptr && lhs.name == rhs->name;
            },
            [&](const Expr::Const& lhs) {
                const auto* rhs = std::get_if<Expr::Const>(&b.node());
                return rhs != nullptr && lhs.name == rhs->name;
            },
            [&](const Expr::Unary& lhs) {
                const auto* rhs = std::get_if<Expr::Unary>(&b.node());
                return rhs != nullptr && lhs.op == rhs->op &&
                       structurally_equal(*lhs.child, *rhs->child);
            },
            [&](const Expr::Binary& lhs) {
                const auto* rhs = std::get_if<Expr::Binary>(&b.node());
                return rhs != nullptr && lhs.op == rhs->op &&
                       structurally_equal(*lhs.left, *rhs->left) &&
                       structurally_equal(*lhs.right, *rhs->right);
            },
        },
        a.node());
}

std::string unparse(const Expr& expr) {
    return std::visit(
        Overloaded{
            [](const Expr::Num& n) { return number_text(n.value); },
            [](const Expr::Var& v) { return v.name; },
            [](const Expr::Const& c) { return c.name; },
            [](const Expr::Unary& u) {
                std::string child = unparse(*u.child);
                if (u.op == UnaryOp::Neg) {
                    // The grammar wants an atom after '-'; a bare function
                    // application is not one, so wrap it.
                    const auto* inner = std::get_if<Expr::Unary>(&u.child->node());
                    if (inner != nullptr && inner->op != UnaryOp::Neg) {
                        child = "(" + child + ")";
                    }
                    return "(-" + child + ")";
                }
                return std::string(unary_name(u.op)) + "(" + child + ")";
            },
            [](const Expr::Binary& b) {
                return "(" + unparse(*b.left) + binary_symbol(b.op) + unparse(*b.right) + ")";
            },
        },
        expr.node());
}

}  // namespace rksolve
