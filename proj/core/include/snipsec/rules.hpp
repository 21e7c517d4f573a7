#pragma once

// Deterministic secure/insecure labeling of security-related snippets.
// Each catalog rule matches one parameter value (e.g. "AES/ECB", "setSeed
// with static values"); a snippet is Insecure iff an insecure rule fires.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "snipsec/ingest.hpp"
#include "snipsec/resolver.hpp"

namespace snipsec::rules {

namespace detail {
class CodeFacts;
}

enum class Label { Secure, Insecure };

enum class Category { TLS, SymmetricCrypto, AsymmetricCrypto, Hash, SecureRandom, Authentication, Storage };

enum class Severity { SecureIndicator, InsecureIndicator };

/// Deployment scenario. Passing Any to label() means "infer from the code".
enum class Context { ClientServer, NonClientServer, Any };

struct MatchInput {
    const detail::CodeFacts& facts;
    const std::set<api::ResolvedElement>& resolved;
};

struct Rule {
    std::string rule_id;
    Category category = Category::TLS;
    Severity severity = Severity::SecureIndicator;
    Context context_condition = Context::Any;
    std::string parameter;  // table row, e.g. "Cipher/Mode"
    std::string value;      // table cell, e.g. "AES/ECB"
    std::string pattern;    // human-readable matcher description
    std::function<bool(const MatchInput&)> matcher;
};

struct SecurityVerdict {
    Label label = Label::Secure;
    std::set<Category> categories;
    std::vector<std::string> fired_rules;  // catalog order
    std::string rationale;

    bool operator==(const SecurityVerdict&) const = default;
};

const std::vector<Rule>& rule_catalog();
const Rule* lookup(std::string_view rule_id);

/// TLS-adjacent code (sockets, URL connections, trust managers, WebViews)
/// is ClientServer; everything else NonClientServer.
Context infer_context(const std::string& code_text);

/// Ids of every rule whose matcher and context condition hold.
std::vector<std::string> fired_rules(const std::string& code_text, const std::set<api::ResolvedElement>& resolved,
                                     Context context);

/// Aggregates fired rule ids into a verdict. Unknown ids are ignored.
SecurityVerdict verdict_from_fired(const std::vector<std::string>& rule_ids);

SecurityVerdict label_code(const std::string& code_text, const std::set<api::ResolvedElement>& resolved,
                           Context context);
SecurityVerdict label(const ingest::SnippetRecord& snippet, const std::set<api::ResolvedElement>& resolved,
                      Context context);

std::string to_string(Label v);
std::string to_string(Category v);
std::string to_string(Severity v);
std::string to_string(Context v);
Label label_from_string(std::string_view s);
Category category_from_string(std::string_view s);
Context context_from_string(std::string_view s);

nlohmann::json catalog_to_json();
nlohmann::json to_json(const SecurityVerdict& v);
SecurityVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace snipsec::rules
