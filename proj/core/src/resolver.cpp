#include "snipsec/resolver.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"
#include "snipsec/java_lexer.hpp"
#include "token_utils.hpp"

namespace snipsec::api {

using java::Token;
using java::TokenKind;

namespace {

bool is_factory_method(const std::string& m)
{
    return m == "getInstance" || m == "getDefault" || m == "getSocketFactory" || m == "getInstanceStrong";
}

struct ElementTable {
    std::map<std::pair<std::string, std::string>, LexedElement> items;

    LexedElement& at(const std::string& simple, const std::string& pkg)
    {
        auto& e = items[{simple, pkg}];
        e.simple_name = simple;
        if (!pkg.empty()) {
            e.explicit_package = pkg;
        }
        return e;
    }
};

// Method names declared directly in the class body starting at `open`
// (index of '{'); nested bodies are skipped.
std::set<std::string> declared_methods_in_body(const std::vector<Token>& toks, std::size_t open)
{
    std::set<std::string> out;
    std::size_t close = java::match_close(toks, open);
    for (std::size_t i = open + 1; i < close; ++i) {
        if (toks[i].is_punct("{")) {
            i = java::match_close(toks, i);
            continue;
        }
        if (auto name = java::method_decl_at(toks, i)) {
            out.insert(*name);
        }
    }
    return out;
}

}  // namespace

std::vector<LexedElement> lex_elements(const std::string& code_text)
{
    const auto toks = java::lex(code_text);
    const auto imports = java::collect_imports(toks);
    const auto vars = java::collect_variable_types(toks);
    ElementTable table;

    auto pkg_for = [&](const std::string& simple, const std::string& inline_pkg) -> std::string {
        if (!inline_pkg.empty()) {
            return inline_pkg;
        }
        auto it = imports.single.find(simple);
        return it == imports.single.end() ? std::string{} : it->second;
    };

    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.is_keyword("import") || t.is_keyword("package")) {
            while (i + 1 < toks.size() && !toks[i].is_punct(";")) {
                ++i;
            }
            continue;
        }
        if (t.is_keyword("new")) {
            auto chain = java::dotted_chain(toks, i + 1);
            if (chain.segments.empty()) {
                continue;
            }
            auto type = java::split_type_chain(chain.segments);
            if (!type || type->type_index + 1 != chain.segments.size()) {
                continue;
            }
            const std::string& simple = chain.segments[type->type_index];
            auto& el = table.at(simple, pkg_for(simple, type->package));
            std::size_t j = java::skip_type_arguments(toks, chain.end);
            if (toks[j].is_punct("(")) {
                el.observed_methods.insert("<init>");
                std::size_t close = java::match_close(toks, j);
                if (close + 1 < toks.size() && toks[close + 1].is_punct("{")) {
                    auto decl = declared_methods_in_body(toks, close + 1);
                    el.declared_methods.insert(decl.begin(), decl.end());
                }
            }
            i = chain.end - 1;
            continue;
        }
        if (t.is_keyword("extends") || t.is_keyword("implements")) {
            // Attach the class body's declared methods to each supertype.
            std::size_t j = i + 1;
            std::vector<std::pair<std::string, std::string>> supers;
            while (j < toks.size() && !toks[j].is_punct("{") && !toks[j].is_punct(";")) {
                if (toks[j].is_ident()) {
                    auto chain = java::dotted_chain(toks, j);
                    auto type = java::split_type_chain(chain.segments);
                    if (type) {
                        const std::string& simple = chain.segments[type->type_index];
                        supers.emplace_back(simple, pkg_for(simple, type->package));
                    }
                    j = java::skip_type_arguments(toks, chain.end);
                    continue;
                }
                ++j;
            }
            if (j < toks.size() && toks[j].is_punct("{")) {
                auto decl = declared_methods_in_body(toks, j);
                for (const auto& [simple, pkg] : supers) {
                    auto& el = table.at(simple, pkg);
                    el.declared_methods.insert(decl.begin(), decl.end());
                }
            }
            continue;
        }
        if (!t.is_ident() || (i > 0 && toks[i - 1].is_punct("."))) {
            continue;
        }
        auto chain = java::dotted_chain(toks, i);
        const auto& seg = chain.segments;
        auto var = vars.find(seg[0]);
        if (var != vars.end()) {
            // receiver.method(...) on a typed local or parameter
            if (seg.size() >= 2 && toks[chain.seg_index[1] + 1].is_punct("(")) {
                auto& el = table.at(var->second.simple, pkg_for(var->second.simple, var->second.package));
                el.observed_methods.insert(seg[1]);
            }
            i = chain.end - 1;
            continue;
        }
        auto type = java::split_type_chain(seg);
        if (!type) {
            i = chain.end - 1;
            continue;
        }
        const std::string& simple = seg[type->type_index];
        auto& el = table.at(simple, pkg_for(simple, type->package));
        std::size_t member = type->type_index + 1;
        if (member < seg.size()) {
            std::size_t member_tok = chain.seg_index[member];
            if (toks[member_tok + 1].is_punct("(")) {
                el.observed_methods.insert(seg[member]);
                if (is_factory_method(seg[member])) {
                    // Factory result keeps the type: X.getInstance(..).m(..)
                    std::size_t close = java::match_close(toks, member_tok + 1);
                    if (close + 3 < toks.size() && toks[close + 1].is_punct(".") && toks[close + 2].is_ident() &&
                        toks[close + 3].is_punct("(")) {
                        el.observed_methods.insert(toks[close + 2].text);
                    }
                }
            } else {
                el.observed_fields.insert(seg[member]);
            }
        }
        i = chain.end - 1;
    }

    // Declared types of locals/parameters are type references too.
    for (const auto& [name, vt] : vars) {
        table.at(vt.simple, pkg_for(vt.simple, vt.package));
    }

    std::vector<LexedElement> out;
    out.reserve(table.items.size());
    for (auto& [key, el] : table.items) {
        out.push_back(std::move(el));
    }
    return out;
}

std::vector<const ClassSpec*> candidates(const LexedElement& element, const ApiRegistry& registry)
{
    std::vector<const ClassSpec*> cands;
    if (element.explicit_package) {
        if (const auto* cls = registry.by_fqn(*element.explicit_package + "." + element.simple_name)) {
            cands.push_back(cls);
        }
    } else {
        cands = registry.by_simple_name(element.simple_name);
    }
    std::erase_if(cands, [&](const ClassSpec* c) {
        for (const auto& m : element.observed_methods) {
            if (m != "<init>" && c->methods.count(m) == 0) {
                return true;
            }
            if (m == "<init>" && c->methods.count(m) == 0 && !c->marker_only) {
                // Interfaces (no constructor) are instantiable only through
                // anonymous bodies.
                if (element.declared_methods.empty()) {
                    return true;
                }
            }
        }
        for (const auto& f : element.observed_fields) {
            if (c->fields.count(f) == 0) {
                return true;
            }
        }
        return false;
    });
    std::sort(cands.begin(), cands.end(), [](const ClassSpec* a, const ClassSpec* b) { return a->fqn < b->fqn; });
    return cands;
}

std::set<ResolvedElement> resolve(const std::vector<LexedElement>& elements, const ApiRegistry& registry,
                                  ResolveStats* stats)
{
    ResolveStats local;
    ResolveStats& st = stats != nullptr ? *stats : local;
    std::map<std::string, ResolvedElement> merged;
    for (const auto& el : elements) {
        auto cands = candidates(el, registry);
        if (cands.empty()) {
            ++st.unresolved;
            continue;
        }
        if (cands.size() > 1) {
            ++st.ambiguous;
            continue;
        }
        const ClassSpec* cls = cands.front();
        if (registry.is_blacklisted_package(cls->package)) {
            ++st.blacklisted;
            continue;
        }
        std::set<std::string> methods = el.observed_methods;
        for (const auto& m : el.declared_methods) {
            if (cls->methods.count(m) != 0) {
                methods.insert(m);
            }
        }
        const bool has_real_call = std::any_of(methods.begin(), methods.end(),
                                               [](const std::string& m) { return m != "<init>"; });
        if (!has_real_call) {
            ++st.init_only;
            continue;
        }
        auto& r = merged[cls->fqn];
        r.simple_name = cls->simple_name;
        r.resolved_fqn = cls->fqn;
        r.observed_methods.insert(methods.begin(), methods.end());
        r.kind = ElementKind::MethodCall;
    }
    std::set<ResolvedElement> out;
    for (auto& [fqn, r] : merged) {
        out.insert(std::move(r));
    }
    return out;
}

SecurityRelevance is_security_related(const std::string& code_text, const ApiRegistry& registry,
                                      ResolveStats* stats)
{
    SecurityRelevance rel;
    rel.resolved = resolve(lex_elements(code_text), registry, stats);
    rel.related = !rel.resolved.empty();
    return rel;
}

std::string to_string(ElementKind kind)
{
    switch (kind) {
    case ElementKind::TypeRef: return "type_ref";
    case ElementKind::MethodCall: return "method_call";
    case ElementKind::FieldAccess: return "field_access";
    }
    return "type_ref";
}

nlohmann::json to_json(const ResolvedElement& e)
{
    return nlohmann::json{{"fqn", e.resolved_fqn}, {"methods", e.observed_methods}};
}

ResolvedElement resolved_from_json(const nlohmann::json& j)
{
    ResolvedElement e;
    e.resolved_fqn = j.at("fqn").get<std::string>();
    auto dot = e.resolved_fqn.rfind('.');
    e.simple_name = dot == std::string::npos ? e.resolved_fqn : e.resolved_fqn.substr(dot + 1);
    e.observed_methods = j.at("methods").get<std::set<std::string>>();
    e.kind = ElementKind::MethodCall;
    return e;
}

}  // namespace snipsec::api
