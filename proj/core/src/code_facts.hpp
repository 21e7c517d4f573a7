#pragma once

// Snippet-local syntactic facts consumed by the labeling rules: call sites,
// constructions, declared methods, and a shallow value classifier that
// follows local assignments back to literals.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snipsec/java_lexer.hpp"
#include "token_utils.hpp"

namespace snipsec::rules::detail {

using java::Token;

struct Span {
    std::size_t begin = 0;  // inclusive token index
    std::size_t end = 0;    // exclusive
    bool empty() const noexcept { return begin >= end; }
};

struct CallSite {
    std::string receiver;       // text of a simple receiver ("c", "Cipher"), empty otherwise
    std::string receiver_type;  // declared/static type of the receiver when known
    std::string method;
    std::size_t name_index = 0;
    std::size_t open = 0;
    std::size_t close = 0;
    std::vector<Span> args;
};

struct NewSite {
    std::string type;
    std::size_t index = 0;
    std::vector<Span> args;
    bool array = false;
    std::optional<std::size_t> body_open;  // anonymous class body
};

struct MethodDecl {
    std::string name;
    std::size_t name_index = 0;
    std::optional<Span> body;  // tokens strictly inside the braces
};

enum class ValueKind {
    Unknown,
    StringLit,
    IntLit,
    ArrayLit,       // { ... } or new T[]{ ... }
    SizedArray,     // new T[n]
    LiteralBytes,   // "...".getBytes()
    DerivedBytes,   // x.getBytes() on a non-literal
    KeyMaterial,    // x.getEncoded()
    CipherIv,       // cipher.getIV()
    Digest,         // md.digest(...)
    Call,           // any other call; see call_* fields
};

struct ValueInfo {
    ValueKind kind = ValueKind::Unknown;
    std::string text;             // string literal contents
    long long int_value = 0;
    std::size_t length = 0;       // array length when known
    bool all_zero = false;
    bool random_filled = false;   // variable passed to nextBytes/generateSeed
    bool digest_of_literal = false;
    std::string root_var;         // last variable followed
    std::string call_receiver;
    std::string call_method;
    std::string call_first_string;
};

class CodeFacts {
public:
    explicit CodeFacts(const std::string& code);

    const std::vector<Token>& tokens() const noexcept { return toks_; }
    const std::vector<CallSite>& calls() const noexcept { return calls_; }
    const std::vector<NewSite>& news() const noexcept { return news_; }
    const std::vector<MethodDecl>& declarations() const noexcept { return decls_; }
    /// Right-hand sides of `name = ...`, in source order.
    const std::map<std::string, std::vector<Span>>& assignments() const noexcept { return assignments_; }

    bool has_identifier(const std::string& name) const { return identifiers_.count(name) != 0; }
    bool any_identifier_icase(const std::vector<std::string>& needles) const;
    const std::set<std::string>& identifiers() const noexcept { return identifiers_; }
    const std::vector<std::string>& string_literals() const noexcept { return strings_; }

    std::vector<const CallSite*> calls_named(const std::string& method) const;
    std::vector<const CallSite*> calls_on(const std::string& receiver_type, const std::string& method) const;
    std::vector<const NewSite*> news_of(const std::string& type) const;
    std::vector<const MethodDecl*> declared(const std::string& name) const;

    ValueInfo eval(Span span) const;
    /// First string literal directly in the span or reachable via a variable.
    std::optional<std::string> string_arg(Span span) const;
    std::optional<long long> int_arg(Span span) const;

    /// Identifiers of method calls inside a span.
    std::set<std::string> called_in(Span span) const;
    bool span_contains_ident(Span span, const std::string& name) const;
    bool span_is_return_true(Span span) const;
    bool span_is_trivially_empty(Span span) const;

private:
    ValueInfo eval_depth(Span span, int depth) const;
    std::optional<Span> last_assignment(const std::string& var) const;
    bool random_filled(const std::string& var) const;

    std::vector<Token> toks_;
    std::map<std::string, java::VarType> vars_;
    std::vector<CallSite> calls_;
    std::vector<NewSite> news_;
    std::vector<MethodDecl> decls_;
    std::map<std::string, std::vector<Span>> assignments_;
    std::set<std::string> identifiers_;
    std::vector<std::string> strings_;
};

std::vector<Span> split_args(const std::vector<Token>& toks, std::size_t open, std::size_t close);

}  // namespace snipsec::rules::detail
