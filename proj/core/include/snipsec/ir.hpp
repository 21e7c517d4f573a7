#pragma once

// Snippet and corpus compilation into a small three-address IR, per-method
// data-dependence graphs, and their weakly connected "semantic blocks".

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "snipsec/registry.hpp"

namespace snipsec::ir {

inline constexpr std::size_t kInstrKinds = 16;

enum class InstrKind {
    InvokeVirtual,
    InvokeStatic,
    InvokeConstructor,
    NewObject,
    FieldGet,
    FieldPut,
    ArrayNew,
    ArrayLoad,
    ArrayStore,
    ConstLoad,
    BinaryOp,
    Compare,
    Cast,
    Assign,
    Return,
    Throw,
};

std::string to_string(InstrKind k);
InstrKind instr_kind_from_string(const std::string& s);

/// Type given to references the front end cannot resolve.
inline constexpr const char* kUnknownType = "UNKNOWNP.UNKNOWN";

struct IrInstruction {
    std::size_t id = 0;
    InstrKind kind = InstrKind::ConstLoad;
    std::set<std::size_t> uses;         // value ids (= defining instruction ids)
    std::optional<std::size_t> defines; // equals id when present
    std::string detail;                 // callee, type, literal or operator

    bool operator==(const IrInstruction&) const = default;
};

struct IrMethod {
    std::vector<std::string> qualified_path;  // classes..., method
    std::vector<IrInstruction> instructions;
    std::multiset<std::string> constants;
    std::set<std::string> security_method_names;

    std::string name() const { return qualified_path.empty() ? std::string{} : qualified_path.back(); }
    std::vector<std::string> class_path() const
    {
        return {qualified_path.begin(), qualified_path.end() - (qualified_path.empty() ? 0 : 1)};
    }
    /// No instructions, constants, or security calls.
    bool empty() const noexcept
    {
        return instructions.empty() && constants.empty() && security_method_names.empty();
    }

    bool operator==(const IrMethod&) const = default;
};

struct IrClass {
    std::vector<std::string> path;
    std::vector<std::string> supertypes;  // simple names
    bool security_supertype = false;      // a supertype resolves into a security library
    bool instantiates_security_type = false;

    bool operator==(const IrClass&) const = default;
};

struct CompileResult {
    bool ok = false;
    std::string rejection;  // set when !ok
    std::vector<IrMethod> methods;
    std::vector<IrClass> classes;
};

/// Completes a partial snippet: unchanged when it already declares a type;
/// member-level code gets `class Snippet { ... }`; statement lists get
/// `class Snippet { void snippetBody() { ... } }`. Imports are hoisted.
std::string wrap_partial(const std::string& code_text);

/// Parses and lowers one compilation unit. Never throws on bad input;
/// unparseable text yields ok = false with a reason.
CompileResult compile(const std::string& unit_text, const api::ApiRegistry& registry);

/// compile(wrap_partial(code)).
CompileResult compile_snippet(const std::string& code_text, const api::ApiRegistry& registry);

struct MethodPdg {
    std::size_t node_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // def -> use, sorted
    std::vector<std::vector<std::size_t>> semantic_blocks;    // sorted by smallest node id
    std::vector<std::size_t> out_degree;
};

MethodPdg build_pdg(const IrMethod& m);

nlohmann::json to_json(const IrMethod& m);
nlohmann::json to_json(const IrMethod& m, const MethodPdg& pdg);
IrMethod method_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IrClass& c);
IrClass class_from_json(const nlohmann::json& j);

}  // namespace snipsec::ir
