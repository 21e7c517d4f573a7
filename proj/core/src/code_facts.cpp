#include "code_facts.hpp"

#include <algorithm>

#include "snipsec/common.hpp"

namespace snipsec::rules::detail {

using java::TokenKind;

std::vector<Span> split_args(const std::vector<Token>& toks, std::size_t open, std::size_t close)
{
    std::vector<Span> out;
    if (close <= open + 1) {
        return out;
    }
    int depth = 0;
    std::size_t start = open + 1;
    for (std::size_t i = open + 1; i < close; ++i) {
        const Token& t = toks[i];
        if (t.kind != TokenKind::Punct) {
            continue;
        }
        if (t.text == "(" || t.text == "[" || t.text == "{") {
            ++depth;
        } else if (t.text == ")" || t.text == "]" || t.text == "}") {
            --depth;
        } else if (t.text == "," && depth == 0) {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    out.push_back({start, close});
    return out;
}

namespace {

// End of an initializer expression starting at `i`: the first ';' or ','
// at bracket depth zero, or an unmatched closer.
std::size_t expression_end(const std::vector<Token>& toks, std::size_t i)
{
    int depth = 0;
    for (; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind == TokenKind::End) {
            return i;
        }
        if (t.kind != TokenKind::Punct) {
            continue;
        }
        if (t.text == "(" || t.text == "[" || t.text == "{") {
            ++depth;
        } else if (t.text == ")" || t.text == "]" || t.text == "}") {
            if (--depth < 0) {
                return i;
            }
        } else if ((t.text == ";" || t.text == ",") && depth == 0) {
            return i;
        }
    }
    return toks.size() - 1;
}

}  // namespace

CodeFacts::CodeFacts(const std::string& code) : toks_(java::lex(code)), vars_(java::collect_variable_types(toks_))
{
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
        const Token& t = toks_[i];
        if (t.kind == TokenKind::StringLiteral) {
            strings_.push_back(t.value);
            continue;
        }
        if (t.is_keyword("new")) {
            auto chain = java::dotted_chain(toks_, i + 1);
            if (chain.segments.empty()) {
                // new byte[...] with a primitive element type
                if (i + 2 < toks_.size() && toks_[i + 1].kind == TokenKind::Keyword && toks_[i + 2].is_punct("[")) {
                    NewSite site;
                    site.type = toks_[i + 1].text;
                    site.index = i;
                    site.array = true;
                    std::size_t close = java::match_close(toks_, i + 2);
                    site.args.push_back({i + 3, close});
                    news_.push_back(std::move(site));
                }
                continue;
            }
            NewSite site;
            site.type = chain.segments.back();
            site.index = i;
            std::size_t j = java::skip_type_arguments(toks_, chain.end);
            if (toks_[j].is_punct("(")) {
                std::size_t close = java::match_close(toks_, j);
                site.args = split_args(toks_, j, close);
                if (close + 1 < toks_.size() && toks_[close + 1].is_punct("{")) {
                    site.body_open = close + 1;
                }
            } else if (toks_[j].is_punct("[")) {
                site.array = true;
                std::size_t close = java::match_close(toks_, j);
                site.args.push_back({j + 1, close});
            }
            news_.push_back(std::move(site));
            continue;
        }
        if (!t.is_ident()) {
            continue;
        }
        identifiers_.insert(t.text);
        if (toks_[i + 1].is_punct("=") && !(i > 0 && toks_[i - 1].is_punct("."))) {
            std::size_t end = expression_end(toks_, i + 2);
            assignments_[t.text].push_back({i + 2, end});
        }
        if (!toks_[i + 1].is_punct("(")) {
            continue;
        }
        if (auto name = java::method_decl_at(toks_, i)) {
            MethodDecl decl;
            decl.name = *name;
            decl.name_index = i;
            if (auto open = java::method_body_open(toks_, i)) {
                std::size_t close = java::match_close(toks_, *open);
                decl.body = Span{*open + 1, close};
            }
            decls_.push_back(std::move(decl));
            continue;
        }
        if (i > 0 && toks_[i - 1].is_keyword("new")) {
            continue;
        }
        CallSite call;
        call.method = t.text;
        call.name_index = i;
        call.open = i + 1;
        call.close = java::match_close(toks_, i + 1);
        call.args = split_args(toks_, call.open, call.close);
        if (i >= 2 && toks_[i - 1].is_punct(".") && toks_[i - 2].is_ident() &&
            !(i >= 3 && toks_[i - 3].is_punct("."))) {
            call.receiver = toks_[i - 2].text;
            auto v = vars_.find(call.receiver);
            if (v != vars_.end()) {
                call.receiver_type = v->second.simple;
            } else if (java::looks_like_type_name(call.receiver)) {
                call.receiver_type = call.receiver;
            }
        } else if (i >= 2 && toks_[i - 1].is_punct(".") && toks_[i - 2].is_ident()) {
            // a.b.C.m(): the last segment before the method decides
            const std::string& seg = toks_[i - 2].text;
            if (java::looks_like_type_name(seg)) {
                call.receiver = seg;
                call.receiver_type = seg;
            }
        }
        calls_.push_back(std::move(call));
    }
}

bool CodeFacts::any_identifier_icase(const std::vector<std::string>& needles) const
{
    for (const auto& id : identifiers_) {
        for (const auto& n : needles) {
            if (contains_icase(id, n)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<const CallSite*> CodeFacts::calls_named(const std::string& method) const
{
    std::vector<const CallSite*> out;
    for (const auto& c : calls_) {
        if (c.method == method) {
            out.push_back(&c);
        }
    }
    return out;
}

std::vector<const CallSite*> CodeFacts::calls_on(const std::string& receiver_type, const std::string& method) const
{
    std::vector<const CallSite*> out;
    for (const auto& c : calls_) {
        if (c.method == method && c.receiver_type == receiver_type) {
            out.push_back(&c);
        }
    }
    return out;
}

std::vector<const NewSite*> CodeFacts::news_of(const std::string& type) const
{
    std::vector<const NewSite*> out;
    for (const auto& n : news_) {
        if (n.type == type) {
            out.push_back(&n);
        }
    }
    return out;
}

std::vector<const MethodDecl*> CodeFacts::declared(const std::string& name) const
{
    std::vector<const MethodDecl*> out;
    for (const auto& d : decls_) {
        if (d.name == name) {
            out.push_back(&d);
        }
    }
    return out;
}

std::optional<Span> CodeFacts::last_assignment(const std::string& var) const
{
    auto it = assignments_.find(var);
    if (it == assignments_.end() || it->second.empty()) {
        return std::nullopt;
    }
    return it->second.back();
}

bool CodeFacts::random_filled(const std::string& var) const
{
    if (var.empty()) {
        return false;
    }
    for (const auto& c : calls_) {
        if (c.method == "nextBytes" && !c.args.empty()) {
            const Span& a = c.args.front();
            if (a.end == a.begin + 1 && toks_[a.begin].is_ident(var)) {
                return true;
            }
        }
    }
    return false;
}

ValueInfo CodeFacts::eval(Span span) const
{
    return eval_depth(span, 6);
}

ValueInfo CodeFacts::eval_depth(Span span, int depth) const
{
    ValueInfo info;
    if (span.empty() || span.end > toks_.size()) {
        return info;
    }
    // Strip redundant parentheses and simple casts: (byte[]) x, (int) 5
    while (span.end - span.begin >= 2 && toks_[span.begin].is_punct("(")) {
        std::size_t close = java::match_close(toks_, span.begin);
        if (close + 1 == span.end) {
            span = {span.begin + 1, close};
        } else if (close + 1 < span.end) {
            bool cast = true;
            for (std::size_t k = span.begin + 1; k < close; ++k) {
                const Token& t = toks_[k];
                if (!(t.is_ident() || t.kind == TokenKind::Keyword || t.is_punct("[") || t.is_punct("]") ||
                      t.is_punct("."))) {
                    cast = false;
                }
            }
            if (!cast) {
                break;
            }
            span = {close + 1, span.end};
        } else {
            break;
        }
    }
    const std::size_t n = span.end - span.begin;
    const Token& first = toks_[span.begin];

    if (n == 1 && first.kind == TokenKind::StringLiteral) {
        info.kind = ValueKind::StringLit;
        info.text = first.value;
        info.length = first.value.size();
        return info;
    }
    if ((n == 1 && first.kind == TokenKind::IntLiteral) ||
        (n == 2 && first.is_punct("-") && toks_[span.begin + 1].kind == TokenKind::IntLiteral)) {
        long long v = 0;
        if (java::int_value(toks_[span.end - 1].text, v)) {
            info.kind = ValueKind::IntLit;
            info.int_value = first.is_punct("-") ? -v : v;
        }
        return info;
    }

    auto array_literal = [&](std::size_t open) {
        std::size_t close = java::match_close(toks_, open);
        auto elems = split_args(toks_, open, close);
        if (elems.size() == 1 && elems[0].empty()) {
            elems.clear();
        }
        info.kind = ValueKind::ArrayLit;
        info.length = elems.size();
        info.all_zero = true;
        for (const auto& e : elems) {
            auto v = eval_depth(e, 0);
            if (v.kind != ValueKind::IntLit || v.int_value != 0) {
                info.all_zero = false;
            }
        }
        return info;
    };
    if (first.is_punct("{")) {
        return array_literal(span.begin);
    }
    if (first.is_keyword("new")) {
        // new T[]{...} or new T[n]
        std::size_t j = span.begin + 1;
        while (j < span.end && !toks_[j].is_punct("[") && !toks_[j].is_punct("(")) {
            ++j;
        }
        if (j < span.end && toks_[j].is_punct("[")) {
            std::size_t close = java::match_close(toks_, j);
            if (close + 1 < span.end && toks_[close + 1].is_punct("{")) {
                return array_literal(close + 1);
            }
            info.kind = ValueKind::SizedArray;
            auto size = eval_depth({j + 1, close}, depth > 0 ? depth - 1 : 0);
            if (size.kind == ValueKind::IntLit && size.int_value > 0) {
                info.length = static_cast<std::size_t>(size.int_value);
            }
            info.all_zero = true;
            return info;
        }
        return info;
    }
    if (n == 1 && first.is_ident()) {
        info.root_var = first.text;
        if (depth > 0) {
            if (auto rhs = last_assignment(first.text)) {
                if (rhs->begin != span.begin) {
                    ValueInfo inner = eval_depth(*rhs, depth - 1);
                    inner.random_filled = inner.random_filled || random_filled(first.text);
                    inner.root_var = first.text;
                    return inner;
                }
            }
        }
        info.random_filled = random_filled(first.text);
        return info;
    }

    // Trailing call: <receiver> . method ( args )
    const Token& last = toks_[span.end - 1];
    if (!last.is_punct(")")) {
        return info;
    }
    std::size_t open = span.end - 1;
    {
        // walk back to the matching '('
        int d = 0;
        for (std::size_t k = span.end; k-- > span.begin;) {
            if (toks_[k].is_punct(")")) {
                ++d;
            } else if (toks_[k].is_punct("(")) {
                if (--d == 0) {
                    open = k;
                    break;
                }
            }
        }
    }
    if (open == span.begin || !toks_[open - 1].is_ident()) {
        return info;
    }
    const std::string method = toks_[open - 1].text;
    auto args = split_args(toks_, open, span.end - 1);
    if (args.size() == 1 && args[0].empty()) {
        args.clear();
    }
    Span receiver{span.begin, span.begin};
    if (open >= span.begin + 2 && toks_[open - 2].is_punct(".")) {
        receiver = {span.begin, open - 2};
    }
    info.call_method = method;
    if (receiver.end == receiver.begin + 1) {
        info.call_receiver = toks_[receiver.begin].text;
    }

    if (method == "getBytes" && !receiver.empty()) {
        auto r = eval_depth(receiver, depth > 0 ? depth - 1 : 0);
        if (r.kind == ValueKind::StringLit) {
            info.kind = ValueKind::LiteralBytes;
            info.text = r.text;
            info.length = r.text.size();
        } else {
            info.kind = ValueKind::DerivedBytes;
            info.root_var = r.root_var;
        }
        return info;
    }
    if (method == "getEncoded") {
        info.kind = ValueKind::KeyMaterial;
        return info;
    }
    if (method == "getIV") {
        info.kind = ValueKind::CipherIv;
        return info;
    }
    if (method == "digest") {
        info.kind = ValueKind::Digest;
        if (!args.empty()) {
            auto a = eval_depth(args.front(), depth > 0 ? depth - 1 : 0);
            info.digest_of_literal = a.kind == ValueKind::LiteralBytes || a.kind == ValueKind::StringLit;
        }
        return info;
    }
    if ((method == "copyOf" || method == "copyOfRange") && !args.empty() && depth > 0) {
        ValueInfo inner = eval_depth(args.front(), depth - 1);
        if (method == "copyOf" && args.size() >= 2) {
            auto len = eval_depth(args[1], 0);
            if (len.kind == ValueKind::IntLit && len.int_value > 0) {
                inner.length = static_cast<std::size_t>(len.int_value);
            }
        }
        return inner;
    }
    info.kind = ValueKind::Call;
    if (method == "generateSeed") {
        info.random_filled = true;
        if (!args.empty()) {
            auto len = eval_depth(args.front(), depth > 0 ? depth - 1 : 0);
            if (len.kind == ValueKind::IntLit && len.int_value > 0) {
                info.length = static_cast<std::size_t>(len.int_value);
            }
        }
    }
    if (!args.empty()) {
        auto a = eval_depth(args.front(), depth > 0 ? depth - 1 : 0);
        if (a.kind == ValueKind::StringLit) {
            info.call_first_string = a.text;
        }
    }
    return info;
}

std::optional<std::string> CodeFacts::string_arg(Span span) const
{
    auto v = eval(span);
    if (v.kind == ValueKind::StringLit) {
        return v.text;
    }
    return std::nullopt;
}

std::optional<long long> CodeFacts::int_arg(Span span) const
{
    auto v = eval(span);
    if (v.kind == ValueKind::IntLit) {
        return v.int_value;
    }
    return std::nullopt;
}

std::set<std::string> CodeFacts::called_in(Span span) const
{
    std::set<std::string> out;
    for (std::size_t i = span.begin; i < span.end && i + 1 < toks_.size(); ++i) {
        if (toks_[i].is_ident() && toks_[i + 1].is_punct("(") && !(i > 0 && toks_[i - 1].is_keyword("new"))) {
            out.insert(toks_[i].text);
        }
    }
    return out;
}

bool CodeFacts::span_contains_ident(Span span, const std::string& name) const
{
    for (std::size_t i = span.begin; i < span.end && i < toks_.size(); ++i) {
        if (toks_[i].is_ident(name)) {
            return true;
        }
    }
    return false;
}

bool CodeFacts::span_is_return_true(Span span) const
{
    return span.end - span.begin == 3 && toks_[span.begin].is_keyword("return") &&
           toks_[span.begin + 1].is_keyword("true") && toks_[span.begin + 2].is_punct(";");
}

bool CodeFacts::span_is_trivially_empty(Span span) const
{
    const std::size_t n = span.end - span.begin;
    return n == 0 || (n == 2 && toks_[span.begin].is_keyword("return") && toks_[span.begin + 1].is_punct(";"));
}

}  // namespace snipsec::rules::detail
