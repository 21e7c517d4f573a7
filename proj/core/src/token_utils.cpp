#include "token_utils.hpp"

#include <cctype>

namespace snipsec::java {

std::size_t match_close(const std::vector<Token>& toks, std::size_t open)
{
    const std::string& o = toks[open].text;
    const std::string c = o == "(" ? ")" : o == "[" ? "]" : "}";
    int depth = 0;
    for (std::size_t i = open; i < toks.size(); ++i) {
        if (toks[i].kind != TokenKind::Punct) {
            continue;
        }
        if (toks[i].text == o) {
            ++depth;
        } else if (toks[i].text == c) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return toks.size() - 1;
}

std::size_t skip_type_arguments(const std::vector<Token>& toks, std::size_t i)
{
    if (i >= toks.size() || !toks[i].is_punct("<")) {
        return i;
    }
    int depth = 0;
    for (std::size_t j = i; j < toks.size(); ++j) {
        const Token& t = toks[j];
        if (t.is_punct("<")) {
            ++depth;
        } else if (t.is_punct(">")) {
            --depth;
        } else if (t.is_punct(">>")) {
            depth -= 2;
        } else if (t.is_punct(">>>")) {
            depth -= 3;
        } else if (!(t.is_ident() || t.is_punct(",") || t.is_punct(".") || t.is_punct("?") ||
                     t.is_punct("[") || t.is_punct("]") || t.is_punct("&") || t.is_keyword("extends") ||
                     t.is_keyword("super") || (t.kind == TokenKind::Keyword && is_primitive_type(t.text)))) {
            return i;
        }
        if (depth <= 0) {
            return j + 1;
        }
    }
    return i;
}

DottedChain dotted_chain(const std::vector<Token>& toks, std::size_t i)
{
    DottedChain chain;
    if (i >= toks.size() || !toks[i].is_ident()) {
        chain.end = i;
        return chain;
    }
    chain.segments.push_back(toks[i].text);
    chain.seg_index.push_back(i);
    std::size_t j = i + 1;
    while (j + 1 < toks.size() && toks[j].is_punct(".") && toks[j + 1].is_ident()) {
        chain.segments.push_back(toks[j + 1].text);
        chain.seg_index.push_back(j + 1);
        j += 2;
    }
    chain.end = j;
    return chain;
}

bool looks_like_constant(const std::string& s)
{
    if (s.size() < 2) {
        return false;
    }
    bool has_upper = false;
    for (char c : s) {
        if (std::islower(static_cast<unsigned char>(c)) != 0) {
            return false;
        }
        has_upper = has_upper || std::isupper(static_cast<unsigned char>(c)) != 0;
    }
    return has_upper;
}

bool looks_like_type_name(const std::string& s)
{
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) != 0 && !looks_like_constant(s);
}

std::optional<TypeSplit> split_type_chain(const std::vector<std::string>& segments)
{
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const std::string& s = segments[k];
        if (looks_like_type_name(s)) {
            TypeSplit split;
            split.type_index = k;
            for (std::size_t p = 0; p < k; ++p) {
                if (!split.package.empty()) {
                    split.package.push_back('.');
                }
                split.package += segments[p];
            }
            return split;
        }
        if (s.empty() || std::islower(static_cast<unsigned char>(s[0])) == 0) {
            return std::nullopt;
        }
        // A single lowercase leading segment is a variable, not a package.
        if (k == 0 && segments.size() == 1) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Imports collect_imports(const std::vector<Token>& toks)
{
    Imports imports;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (!toks[i].is_keyword("import")) {
            continue;
        }
        std::size_t j = i + 1;
        if (toks[j].is_keyword("static")) {
            continue;
        }
        auto chain = dotted_chain(toks, j);
        if (chain.segments.empty()) {
            continue;
        }
        j = chain.end;
        if (j + 1 < toks.size() && toks[j].is_punct(".") && toks[j + 1].is_punct("*")) {
            std::string pkg;
            for (const auto& s : chain.segments) {
                pkg += (pkg.empty() ? "" : ".") + s;
            }
            imports.wildcard.insert(pkg);
            continue;
        }
        if (chain.segments.size() >= 2) {
            std::string pkg;
            for (std::size_t k = 0; k + 1 < chain.segments.size(); ++k) {
                pkg += (pkg.empty() ? "" : ".") + chain.segments[k];
            }
            imports.single[chain.segments.back()] = pkg;
        }
    }
    return imports;
}

std::map<std::string, VarType> collect_variable_types(const std::vector<Token>& toks)
{
    std::map<std::string, VarType> vars;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (!toks[i].is_ident() || (i > 0 && (toks[i - 1].is_punct(".") || toks[i - 1].is_keyword("new")))) {
            continue;
        }
        auto chain = dotted_chain(toks, i);
        auto split = split_type_chain(chain.segments);
        if (!split || split->type_index + 1 != chain.segments.size()) {
            continue;
        }
        std::size_t j = skip_type_arguments(toks, chain.end);
        bool array = false;
        while (j + 1 < toks.size() && toks[j].is_punct("[") && toks[j + 1].is_punct("]")) {
            j += 2;
            array = true;
        }
        if (j + 1 >= toks.size() || !toks[j].is_ident()) {
            continue;
        }
        const Token& after = toks[j + 1];
        if (after.is_punct("=") || after.is_punct(";") || after.is_punct(",") || after.is_punct(")") ||
            after.is_punct(":")) {
            vars[toks[j].text] = VarType{chain.segments.back(), split->package, array};
        }
    }
    return vars;
}

std::optional<std::string> method_decl_at(const std::vector<Token>& toks, std::size_t i)
{
    if (i == 0 || i + 1 >= toks.size() || !toks[i].is_ident() || !toks[i + 1].is_punct("(")) {
        return std::nullopt;
    }
    const Token& prev = toks[i - 1];
    const bool type_before = (prev.is_ident() && !toks[i - 1].is_keyword("new")) || prev.is_punct("]") ||
                             prev.is_punct(">") ||
                             (prev.kind == TokenKind::Keyword && is_primitive_type(prev.text));
    if (!type_before) {
        return std::nullopt;
    }
    // `return foo(...)`-style false positives have a keyword before; an
    // identifier before a call is only a declaration when a body or ';' follows
    // the parameter list.
    if (i >= 2 && toks[i - 2].is_punct(".")) {
        return std::nullopt;
    }
    std::size_t close = match_close(toks, i + 1);
    std::size_t j = close + 1;
    if (j < toks.size() && toks[j].is_keyword("throws")) {
        ++j;
        while (j < toks.size() && (toks[j].is_ident() || toks[j].is_punct(".") || toks[j].is_punct(","))) {
            ++j;
        }
    }
    if (j < toks.size() && (toks[j].is_punct("{") || toks[j].is_punct(";"))) {
        if (toks[j].is_punct(";") && !(prev.is_ident() || prev.kind == TokenKind::Keyword)) {
            return std::nullopt;
        }
        if (toks[j].is_punct(";")) {
            // `Type name(args);` is ambiguous with a call statement; only the
            // abstract form with typed parameters counts.
            bool typed_params = close > i + 2 && toks[i + 2].is_ident() && toks[i + 3].is_ident();
            if (!typed_params) {
                return std::nullopt;
            }
        }
        return toks[i].text;
    }
    return std::nullopt;
}

std::optional<std::size_t> method_body_open(const std::vector<Token>& toks, std::size_t name_index)
{
    std::size_t close = match_close(toks, name_index + 1);
    std::size_t j = close + 1;
    if (j < toks.size() && toks[j].is_keyword("throws")) {
        ++j;
        while (j < toks.size() && (toks[j].is_ident() || toks[j].is_punct(".") || toks[j].is_punct(","))) {
            ++j;
        }
    }
    if (j < toks.size() && toks[j].is_punct("{")) {
        return j;
    }
    return std::nullopt;
}

}  // namespace snipsec::java
