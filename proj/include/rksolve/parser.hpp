#pragma once

#include <string_view>
#include <vector>

#include "rksolve/ast.hpp"
#include "rksolve/token.hpp"

namespace rksolve {

/// Recursive descent over the expression grammar, one layer per precedence
/// level: +,- then *,/ then ^ then prefix (function names and unary minus)
/// then atoms (number, identifier, parenthesized expression). The additive
/// and multiplicative layers associate left, ^ associates right, and unary
/// minus binds tighter than ^ (so "-x^2" is "(-x)^2"). A single trailing
/// semicolon before End is consumed and ignored.
///
/// `tokens` must end with an End token. Throws ParseError with the offending
/// position for unexpected tokens, unmatched parentheses, trailing input, or
/// an empty expression.
ExprPtr parse(const std::vector<Token>& tokens);

/// tokenize + parse. Accepts input with or without the trailing semicolon.
ExprPtr parse_function(std::string_view source);

}  // namespace rksolve
