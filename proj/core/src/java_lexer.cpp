#include "snipsec/java_lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

namespace snipsec::java {

namespace {

constexpr std::array kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",      "catch",
    "char",     "class",      "const",     "continue",  "default",  "do",        "double",
    "else",     "enum",       "extends",   "final",     "finally",  "float",     "for",
    "goto",     "if",         "implements", "import",   "instanceof", "int",     "interface",
    "long",     "native",     "new",       "package",   "private",  "protected", "public",
    "return",   "short",      "static",    "strictfp",  "super",    "switch",    "synchronized",
    "this",     "throw",      "throws",    "transient", "try",      "void",      "volatile",
    "while",    "true",       "false",     "null",
};

constexpr std::array kPrimitives = {"boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};

// Longest-first operator table.
constexpr std::array kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", "<<",
};

bool ident_start(unsigned char c)
{
    return std::isalpha(c) != 0 || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c)
{
    return std::isalnum(c) != 0 || c == '_' || c == '$' || c >= 0x80;
}

char decode_escape(std::string_view s, std::size_t& i)
{
    // s[i] is the character after the backslash.
    char c = s[i];
    switch (c) {
    case 'n': return '\n';
    case 't': return '\t';
    case 'r': return '\r';
    case 'b': return '\b';
    case 'f': return '\f';
    case '0': case '1': case '2': case '3': case '4': case '5': case '6': case '7': {
        int v = 0;
        int n = 0;
        while (n < 3 && i < s.size() && s[i] >= '0' && s[i] <= '7') {
            v = v * 8 + (s[i] - '0');
            ++i;
            ++n;
        }
        --i;
        return static_cast<char>(v);
    }
    case 'u': {
        while (i < s.size() && s[i] == 'u') {
            ++i;
        }
        unsigned v = 0;
        if (i + 4 <= s.size()) {
            std::from_chars(s.data() + i, s.data() + i + 4, v, 16);
            i += 3;
        }
        return v < 0x80 ? static_cast<char>(v) : '?';
    }
    default: return c;
    }
}

}  // namespace

bool is_java_keyword(std::string_view word) noexcept
{
    for (const char* k : kKeywords) {
        if (word == k) {
            return true;
        }
    }
    return false;
}

bool is_primitive_type(std::string_view word) noexcept
{
    for (const char* k : kPrimitives) {
        if (word == k) {
            return true;
        }
    }
    return false;
}

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    auto push = [&](TokenKind kind, std::size_t start, std::size_t end, std::string value = {}) {
        Token t;
        t.kind = kind;
        t.text = std::string(src.substr(start, end - start));
        t.value = std::move(value);
        t.offset = start;
        out.push_back(std::move(t));
    };
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c) != 0) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            auto end = src.find("*/", i + 2);
            i = end == std::string_view::npos ? n : end + 2;
            continue;
        }
        const std::size_t start = i;
        if (ident_start(c)) {
            while (i < n && ident_part(static_cast<unsigned char>(src[i]))) {
                ++i;
            }
            std::string_view word = src.substr(start, i - start);
            push(is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start, i);
            continue;
        }
        if (std::isdigit(c) != 0 || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])) != 0)) {
            bool is_float = false;
            if (c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X' || src[i + 1] == 'b' || src[i + 1] == 'B')) {
                i += 2;
                while (i < n && (std::isxdigit(static_cast<unsigned char>(src[i])) != 0 || src[i] == '_')) {
                    ++i;
                }
            } else {
                while (i < n && (std::isdigit(static_cast<unsigned char>(src[i])) != 0 || src[i] == '_')) {
                    ++i;
                }
                if (i < n && src[i] == '.' && !(i + 1 < n && src[i + 1] == '.')) {
                    is_float = true;
                    ++i;
                    while (i < n && std::isdigit(static_cast<unsigned char>(src[i])) != 0) {
                        ++i;
                    }
                }
                if (i < n && (src[i] == 'e' || src[i] == 'E')) {
                    std::size_t j = i + 1;
                    if (j < n && (src[j] == '+' || src[j] == '-')) {
                        ++j;
                    }
                    if (j < n && std::isdigit(static_cast<unsigned char>(src[j])) != 0) {
                        is_float = true;
                        i = j;
                        while (i < n && std::isdigit(static_cast<unsigned char>(src[i])) != 0) {
                            ++i;
                        }
                    }
                }
            }
            if (i < n && (src[i] == 'f' || src[i] == 'F' || src[i] == 'd' || src[i] == 'D')) {
                is_float = true;
                ++i;
            } else if (i < n && (src[i] == 'l' || src[i] == 'L')) {
                ++i;
            }
            push(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, i);
            continue;
        }
        if (c == '"' || c == '\'') {
            const char quote = static_cast<char>(c);
            std::string value;
            ++i;
            while (i < n && src[i] != quote && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < n) {
                    ++i;
                    value.push_back(decode_escape(src, i));
                    ++i;
                    continue;
                }
                value.push_back(src[i]);
                ++i;
            }
            if (i < n && src[i] == quote) {
                ++i;
            }
            push(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral, start, i, std::move(value));
            continue;
        }
        bool matched = false;
        for (const char* op : kOperators) {
            std::string_view opv(op);
            if (src.substr(i, opv.size()) == opv) {
                i += opv.size();
                push(TokenKind::Punct, start, i);
                matched = true;
                break;
            }
        }
        if (!matched) {
            ++i;
            push(TokenKind::Punct, start, i);
        }
    }
    Token end;
    end.kind = TokenKind::End;
    end.offset = n;
    out.push_back(std::move(end));
    return out;
}

std::string strip_comments(std::string_view src)
{
    std::string out(src);
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        char c = src[i];
        if (c == '"' || c == '\'') {
            ++i;
            while (i < n && src[i] != c && src[i] != '\n') {
                i += src[i] == '\\' ? 2 : 1;
            }
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') {
                out[i++] = ' ';
            }
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            auto end = src.find("*/", i + 2);
            std::size_t stop = end == std::string_view::npos ? n : end + 2;
            for (; i < stop; ++i) {
                if (out[i] != '\n') {
                    out[i] = ' ';
                }
            }
            continue;
        }
        ++i;
    }
    return out;
}

bool int_value(std::string_view raw, long long& out) noexcept
{
    std::string digits;
    for (char c : raw) {
        if (c != '_' && c != 'l' && c != 'L') {
            digits.push_back(c);
        }
    }
    int base = 10;
    std::size_t skip = 0;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
        base = 16;
        skip = 2;
    } else if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'b' || digits[1] == 'B')) {
        base = 2;
        skip = 2;
    } else if (digits.size() > 1 && digits[0] == '0') {
        base = 8;
        skip = 1;
    }
    unsigned long long v = 0;
    const char* first = digits.data() + skip;
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, v, base);
    if (ec != std::errc{} || ptr != last || first == last) {
        return false;
    }
    out = static_cast<long long>(v);
    return true;
}

std::string canonical_int(std::string_view raw)
{
    long long v = 0;
    if (!int_value(raw, v)) {
        return std::string(raw);
    }
    return std::to_string(v);
}

std::string canonical_float(std::string_view raw)
{
    std::string digits;
    for (char c : raw) {
        if (c != '_' && c != 'f' && c != 'F' && c != 'd' && c != 'D') {
            digits.push_back(c);
        }
    }
    char* end = nullptr;
    double v = std::strtod(digits.c_str(), &end);
    if (end == digits.c_str()) {
        return std::string(raw);
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        return std::string(raw);
    }
    return std::string(buf.data(), ptr);
}

}  // namespace snipsec::java
