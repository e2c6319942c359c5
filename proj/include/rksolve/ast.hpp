#pragma once

#include <memory>
#include <string>
#include <variant>

namespace rksolve {

enum class UnaryOp { Neg, Sin, Cos, Tan, Log, Exp };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree. Nodes are created through the make_* helpers
/// and referenced by shared pointer; a fully built tree may be read from any
/// number of threads without synchronization.
class Expr {
public:
    struct Num {
        double value;  // always finite
    };
    struct Var {
        std::string name;
    };
    struct Const {
        std::string name;  // "e" or "pi"
    };
    struct Unary {
        UnaryOp op;
        ExprPtr child;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr left;
        ExprPtr right;
    };

    using Node = std::variant<Num, Var, Const, Unary, Binary>;

    explicit Expr(Node node) : node_(std::move(node)) {}

    const Node& node() const noexcept { return node_; }

private:
    Node node_;
};

/// Throws std::invalid_argument if `value` is not finite.
ExprPtr make_num(double value);
ExprPtr make_var(std::string name);
/// `name` must be "e" or "pi".
ExprPtr make_const(std::string name);
ExprPtr make_unary(UnaryOp op, ExprPtr child);
ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right);

bool structurally_equal(const Expr& a, const Expr& b);

/// Fully parenthesized text that reparses to a structurally identical tree.
/// (Numeric literals are unsigned in the grammar, so a tree holding a
/// negative Num comes back as unary minus over the positive literal.)
std::string unparse(const Expr& expr);

}  // namespace rksolve
