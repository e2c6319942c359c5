#include "rksolve/parser.hpp"

#include <charconv>
#include <stdexcept>

#include "rksolve/errors.hpp"
#include "rksolve/lexer.hpp"

namespace rksolve {

namespace {

UnaryOp function_op(std::string_view name) {
    if (name == "sin") return UnaryOp::Sin;
    if (name == "cos") return UnaryOp::Cos;
    if (name == "tan") return UnaryOp::Tan;
    if (name == "log") return UnaryOp::Log;
    return UnaryOp::Exp;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    ExprPtr parse_all() {
        if (peek().kind == TokenKind::End || peek().kind == TokenKind::Semicolon) {
            throw ParseError("empty expression", peek().position);
        }
        ExprPtr expr = parse_sum();
        if (peek().kind == TokenKind::Semicolon) advance();
        if (peek().kind != TokenKind::End) {
            throw ParseError("unexpected " + describe(peek()) + " after expression",
                             peek().position, "end of input");
        }
        return expr;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    bool match(TokenKind kind) {
        if (peek().kind == kind) {
            ++index_;
            return true;
        }
        return false;
    }

    static std::string describe(const Token& token) {
        if (token.kind == TokenKind::End) return "end of input";
        return std::string(token_kind_name(token.kind)) + " '" + token.lexeme + "'";
    }

    // additive layer, left-associative
    ExprPtr parse_sum() {
        ExprPtr left = parse_product();
        while (true) {
            if (match(TokenKind::Plus)) {
                left = make_binary(BinaryOp::Add, std::move(left), parse_product());
            } else if (match(TokenKind::Minus)) {
                left = make_binary(BinaryOp::Sub, std::move(left), parse_product());
            } else {
                return left;
            }
        }
    }

    // multiplicative layer, left-associative
    ExprPtr parse_product() {
        ExprPtr left = parse_power();
        while (true) {
            if (match(TokenKind::Star)) {
                left = make_binary(BinaryOp::Mul, std::move(left), parse_power());
            } else if (match(TokenKind::Slash)) {
                left = make_binary(BinaryOp::Div, std::move(left), parse_power());
            } else {
                return left;
            }
        }
    }

    // power layer, right-associative
    ExprPtr parse_power() {
        ExprPtr base = parse_prefix();
        if (match(TokenKind::Caret)) {
            return make_binary(BinaryOp::Pow, std::move(base), parse_power());
        }
        return base;
    }

    // prefix layer: function application and unary minus, both over an atom
    ExprPtr parse_prefix() {
        if (peek().kind == TokenKind::Func) {
            const Token& func = advance();
            return make_unary(function_op(func.lexeme), parse_atom());
        }
        if (match(TokenKind::Minus)) {
            return make_unary(UnaryOp::Neg, parse_atom());
        }
        return parse_atom();
    }

    // atom: number, identifier, or parenthesized expression
    ExprPtr parse_atom() {
        const Token& token = peek();
        switch (token.kind) {
            case TokenKind::Number: {
                advance();
                double value = 0.0;
                const char* begin = token.lexeme.data();
                const char* end = begin + token.lexeme.size();
                auto [ptr, ec] = std::from_chars(begin, end, value);
                if (ec != std::errc{} || ptr != end) {
                    throw ParseError("number literal out of range", token.position);
                }
                return make_num(value);
            }
            case TokenKind::Ident: {
                advance();
                if (token.lexeme == "e" || token.lexeme == "pi") {
                    return make_const(token.lexeme);
                }
                return make_var(token.lexeme);
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = parse_sum();
                if (!match(TokenKind::RParen)) {
                    throw ParseError("expected ')'", peek().position, "')'");
                }
                return inner;
            }
            default:
                throw ParseError("expected a number, variable, or '(' but found " +
                                     describe(token),
                                 token.position, "number, variable, or '('");
        }
    }

    const std::vector<Token>& tokens_;
    std::size_t index_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) {
    if (tokens.empty() || tokens.back().kind != TokenKind::End) {
        throw std::invalid_argument("token sequence must end with an End token");
    }
    return Parser(tokens).parse_all();
}

ExprPtr parse_function(std::string_view source) {
    return parse(tokenize(source));
}

}  // namespace rksolve
