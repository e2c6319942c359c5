#pragma once

#include <string_view>
#include <vector>

#include "rksolve/token.hpp"

namespace rksolve {

/// Scans expression text into tokens. Whitespace separates tokens and is
/// otherwise skipped; the returned sequence always ends with a single End
/// token positioned at the text length. Function names (sin, cos, tan, log,
/// exp) and the constants e and pi are recognized in lowercase only.
///
/// Throws ParseError for characters outside the alphabet, unknown names, and
/// malformed numbers.
std::vector<Token> tokenize(std::string_view source);

}  // namespace rksolve
