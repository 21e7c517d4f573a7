#pragma once

// Token-stream helpers shared by the resolver and the rule engine. These
// work on raw token vectors so they tolerate snippets that do not parse.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snipsec/java_lexer.hpp"

namespace snipsec::java {

/// Index of the bracket closing the one at `open` ('(', '[', '{'), or the
/// index of the End token when unbalanced.
std::size_t match_close(const std::vector<Token>& toks, std::size_t open);

/// Skips a balanced `<...>` starting at `i`; returns `i` when not at '<'.
std::size_t skip_type_arguments(const std::vector<Token>& toks, std::size_t i);

struct DottedChain {
    std::vector<std::string> segments;
    std::vector<std::size_t> seg_index;  // token index per segment
    std::size_t end = 0;                 // one past the last identifier
};

/// Reads `a.b.c` starting at identifier index `i`.
DottedChain dotted_chain(const std::vector<Token>& toks, std::size_t i);

struct TypeSplit {
    std::string package;       // empty when the chain starts with the type
    std::size_t type_index = 0;
};

/// Interprets a dotted chain as [lowercase package...].Type[.member...].
/// Returns nullopt when no segment looks like a type name.
std::optional<TypeSplit> split_type_chain(const std::vector<std::string>& segments);

bool looks_like_type_name(const std::string& s);
bool looks_like_constant(const std::string& s);

struct Imports {
    std::map<std::string, std::string> single;  // simple name -> package
    std::set<std::string> wildcard;
};

Imports collect_imports(const std::vector<Token>& toks);

struct VarType {
    std::string simple;
    std::string package;
    bool array = false;
};

/// Declared types of locals, fields and parameters (`Type name` followed by
/// = ; , ) or :). Later declarations win.
std::map<std::string, VarType> collect_variable_types(const std::vector<Token>& toks);

/// When a method declaration's name token sits at `i`, returns the name.
/// The token before must look like a return type and `(` must follow.
std::optional<std::string> method_decl_at(const std::vector<Token>& toks, std::size_t i);

/// Index of the '{' opening the body of the method declared at `name_index`,
/// or nullopt for abstract/interface declarations.
std::optional<std::size_t> method_body_open(const std::vector<Token>& toks, std::size_t name_index);

}  // namespace snipsec::java
