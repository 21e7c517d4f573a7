#pragma once

// Tolerant lexer for Java-like source text. Never throws: malformed input
// (unterminated literals, stray characters) degrades into best-effort tokens.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace snipsec::java {

enum class TokenKind {
    Identifier,
    Keyword,
    IntLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    Punct,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;   // raw source text
    std::string value;  // decoded contents for string/char literals
    std::size_t offset = 0;

    bool is(TokenKind k) const noexcept { return kind == k; }
    bool is_punct(std::string_view p) const noexcept { return kind == TokenKind::Punct && text == p; }
    bool is_keyword(std::string_view k) const noexcept { return kind == TokenKind::Keyword && text == k; }
    bool is_ident() const noexcept { return kind == TokenKind::Identifier; }
    bool is_ident(std::string_view name) const noexcept { return kind == TokenKind::Identifier && text == name; }
    bool is_literal() const noexcept
    {
        return kind == TokenKind::IntLiteral || kind == TokenKind::FloatLiteral ||
               kind == TokenKind::StringLiteral || kind == TokenKind::CharLiteral;
    }
};

/// Tokenizes `source`, dropping whitespace and comments. The returned vector
/// always ends with a single End token.
std::vector<Token> lex(std::string_view source);

/// Returns `source` with // and /* */ comments replaced by spaces
/// (string and char literals are respected).
std::string strip_comments(std::string_view source);

bool is_java_keyword(std::string_view word) noexcept;
bool is_primitive_type(std::string_view word) noexcept;

/// Canonical text of an integer literal ("0x0A" -> "10", "1_000L" -> "1000").
/// Returns the raw text unchanged when it does not fit in 64 bits.
std::string canonical_int(std::string_view raw);

/// Shortest round-trip text of a floating literal ("1.50f" -> "1.5").
std::string canonical_float(std::string_view raw);

/// Numeric value of an integer literal, if representable.
bool int_value(std::string_view raw, long long& out) noexcept;

}  // namespace snipsec::java
