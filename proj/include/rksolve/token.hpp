#pragma once

#include <cstddef>
#include <string>

namespace rksolve {

enum class TokenKind {
    Number,
    Ident,
    Func,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Semicolon,
    End,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position = 0;  // 0-based character offset into the source
};

}  // namespace rksolve
