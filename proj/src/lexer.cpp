#include "rksolve/lexer.hpp"

#include <array>
#include <cctype>
#include <string>

#include "rksolve/errors.hpp"

namespace rksolve {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

constexpr std::array<std::string_view, 5> kFunctionNames = {"sin", "cos", "tan", "log", "exp"};

bool is_function_name(std::string_view word) {
    for (auto name : kFunctionNames) {
        if (word == name) return true;
    }
    return false;
}

// digits [ '.' digits ] [ ('e'|'E') ['+'|'-'] digits ]
// The exponent marker is consumed only when a well-formed exponent follows,
// so "2e" lexes as the number 2 followed by the constant e.
Token scan_number(std::string_view source, std::size_t& i) {
    const std::size_t start = i;
    while (i < source.size() && is_digit(source[i])) ++i;
    if (i < source.size() && source[i] == '.') {
        if (i + 1 < source.size() && is_digit(source[i + 1])) {
            ++i;
            while (i < source.size() && is_digit(source[i])) ++i;
        } else {
            throw ParseError("malformed number", i);
        }
    }
    if (i < source.size() && (source[i] == 'e' || source[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < source.size() && (source[j] == '+' || source[j] == '-')) ++j;
        if (j < source.size() && is_digit(source[j])) {
            i = j;
            while (i < source.size() && is_digit(source[i])) ++i;
        }
    }
    if (i < source.size() && source[i] == '.') {
        throw ParseError("malformed number", i);
    }
    return {TokenKind::Number, std::string(source.substr(start, i - start)), start};
}

Token scan_word(std::string_view source, std::size_t& i) {
    const std::size_t start = i;
    while (i < source.size() && is_lower(source[i])) ++i;
    std::string_view word = source.substr(start, i - start);
    if (is_function_name(word)) {
        return {TokenKind::Func, std::string(word), start};
    }
    if (word.size() == 1 || word == "pi") {
        return {TokenKind::Ident, std::string(word), start};
    }
    throw ParseError("unknown name '" + std::string(word) + "'", start);
}

}  // namespace

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Number: return "number";
        case TokenKind::Ident: return "identifier";
        case TokenKind::Func: return "function";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < source.size()) {
        const char c = source[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (is_digit(c)) {
            tokens.push_back(scan_number(source, i));
            continue;
        }
        if (is_lower(c)) {
            tokens.push_back(scan_word(source, i));
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ';': kind = TokenKind::Semicolon; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
        }
        tokens.push_back({kind, std::string(1, c), i});
        ++i;
    }
    tokens.push_back({TokenKind::End, "", source.size()});
    return tokens;
}

}  // namespace rksolve
