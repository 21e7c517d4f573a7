#pragma once

// Clone detection of compiled snippets inside compiled target apps:
// semantic-block embedding, Jaccard scores and the per-method / per-snippet
// containment search.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "snipsec/common.hpp"
#include "snipsec/ir.hpp"

namespace snipsec::clone {

inline constexpr std::size_t kVectorDims = 2 * ir::kInstrKinds;

/// Per instruction kind k: [2k] node count, [2k+1] max out-degree.
using SemanticVector = std::array<std::uint32_t, kVectorDims>;

struct MatchConfig {
    double similarity_threshold = 0.91;
    double containment_threshold = 1.0;
    bool candidate_class_filter = true;

    /// Throws ConfigError when a threshold is outside (0, 1].
    void validate() const;
};

SemanticVector embed(const ir::IrMethod& m, const ir::MethodPdg& pdg, const std::vector<std::size_t>& block);

/// Σmin / Σmax; two all-zero vectors score 1. Throws DataError on a
/// dimension mismatch.
double jaccard_similarity(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);

/// |X ∧ Y| / |X| with multiset multiplicities; an empty X scores 1.
template <class T>
double jaccard_containment(const std::multiset<T>& x, const std::multiset<T>& y)
{
    if (x.empty()) {
        return 1.0;
    }
    std::size_t hit = 0;
    for (auto it = x.begin(); it != x.end(); it = x.upper_bound(*it)) {
        hit += std::min(x.count(*it), y.count(*it));
    }
    return static_cast<double>(hit) / static_cast<double>(x.size());
}

template <class T>
double jaccard_containment(const std::set<T>& x, const std::set<T>& y)
{
    if (x.empty()) {
        return 1.0;
    }
    std::size_t hit = 0;
    for (const auto& v : x) {
        hit += y.count(v);
    }
    return static_cast<double>(hit) / static_cast<double>(x.size());
}

/// A method with its graph and block embeddings computed once.
struct PreparedMethod {
    ir::IrMethod method;
    ir::MethodPdg pdg;
    std::vector<SemanticVector> vectors;  // one per semantic block
};

PreparedMethod prepare(ir::IrMethod m);

struct MethodMatch {
    std::vector<double> block_scores;               // per snippet block
    std::vector<std::size_t> assigned_blocks;       // app block index per snippet block
};

/// Block assignment plus name and constant containment. Methods without
/// any instruction, constant or security call never match here.
std::optional<MethodMatch> match_method(const PreparedMethod& sm, const PreparedMethod& am, const MatchConfig& cfg);

/// Names whose empty bodies identify a trust-all X509 trust manager.
bool is_trustmanager_method(const std::string& name);

/// Empty snippet method against an empty app method of the same
/// trust-manager method name.
bool match_empty_trustmanager(const PreparedMethod& sm, const PreparedMethod& am);

struct CompiledApp {
    std::string app_id;
    std::vector<PreparedMethod> methods;  // sorted by path
    std::vector<ir::IrClass> classes;     // sorted by path
};

/// Sorts and prepares compiled methods and classes into an app.
CompiledApp make_app(std::string app_id, std::vector<ir::IrMethod> methods, std::vector<ir::IrClass> classes);

struct CompiledSnippet {
    std::string snippet_id;
    std::vector<PreparedMethod> methods;  // sorted by path
};

CompiledSnippet make_snippet(std::string snippet_id, std::vector<ir::IrMethod> methods);

/// A snippet can only be found when one of its methods calls into a
/// security API or it carries an empty trust-manager method.
bool matchable(const CompiledSnippet& s);

struct CloneMatch {
    std::string snippet_id;
    std::string app_id;
    std::map<std::string, std::string> bindings;              // snippet method -> app method
    std::map<std::string, std::vector<double>> scores;        // snippet method -> block J_s
    bool empty_trustmanager_case = false;

    bool operator==(const CloneMatch&) const = default;
};

std::string path_string(const std::vector<std::string>& path);

/// Top-level app classes holding a security call, a security supertype or
/// a security-type instantiation anywhere inside them.
std::set<std::string> candidate_classes(const CompiledApp& app);

std::optional<CloneMatch> match_snippet(const CompiledSnippet& s, const CompiledApp& app, const MatchConfig& cfg);

nlohmann::json to_json(const CloneMatch& m);
CloneMatch match_from_json(const nlohmann::json& j);

}  // namespace snipsec::clone
