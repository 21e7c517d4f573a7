#pragma once

// Oracle-style resolution of partially qualified snippet elements against
// the ApiRegistry: simple-name lookup, narrowing by observed members,
// blacklist and init-only filtering.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "snipsec/registry.hpp"

namespace snipsec::api {

struct LexedElement {
    std::string simple_name;
    std::set<std::string> observed_methods;
    std::set<std::string> observed_fields;
    // Methods declared in a body that implements/extends this type
    // (anonymous classes, `implements X`). They only count when the
    // resolved class actually declares them.
    std::set<std::string> declared_methods;
    std::optional<std::string> explicit_package;

    bool operator==(const LexedElement&) const = default;
};

enum class ElementKind { TypeRef, MethodCall, FieldAccess };

struct ResolvedElement {
    std::string simple_name;
    std::string resolved_fqn;
    ElementKind kind = ElementKind::TypeRef;
    std::set<std::string> observed_methods;

    bool operator==(const ResolvedElement&) const = default;
    bool operator<(const ResolvedElement& o) const { return resolved_fqn < o.resolved_fqn; }
};

struct ResolveStats {
    std::size_t unresolved = 0;
    std::size_t ambiguous = 0;
    std::size_t blacklisted = 0;
    std::size_t init_only = 0;
};

/// Best-effort syntactic scan; comments are ignored. Elements are keyed by
/// (simple name, explicit package) and returned sorted by that key.
std::vector<LexedElement> lex_elements(const std::string& code_text);

/// Candidate registry classes for one element before blacklist filtering.
std::vector<const ClassSpec*> candidates(const LexedElement& element, const ApiRegistry& registry);

/// Resolves every element. Elements that are unresolved, ambiguous,
/// blacklisted, or carry no method other than "<init>" are dropped.
std::set<ResolvedElement> resolve(const std::vector<LexedElement>& elements, const ApiRegistry& registry,
                                  ResolveStats* stats = nullptr);

struct SecurityRelevance {
    bool related = false;
    std::set<ResolvedElement> resolved;
};

SecurityRelevance is_security_related(const std::string& code_text, const ApiRegistry& registry,
                                      ResolveStats* stats = nullptr);

std::string to_string(ElementKind kind);
nlohmann::json to_json(const ResolvedElement& e);
ResolvedElement resolved_from_json(const nlohmann::json& j);

}  // namespace snipsec::api
