#pragma once

// Staged orchestration: each stage reads the previous stage's JSON-lines
// artifact from the output directory and writes its own. manifest.json
// records input/output hashes so unchanged stages are skipped and stale
// upstream artifacts are refused.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "snipsec/clone.hpp"
#include "snipsec/rules.hpp"

namespace snipsec::pipeline {

namespace fs = std::filesystem;

struct Paths {
    fs::path dump;
    fs::path registry;
    std::optional<fs::path> rule_catalog;     // restricts labeling to the listed rule ids
    std::optional<fs::path> model;            // default <output>/model.json
    fs::path corpus;                          // one sub-directory per app
    fs::path output;
    std::optional<fs::path> comments;         // post_id -> [comment text]
    std::optional<fs::path> training_corpus;  // extra labeled snippets for train

    bool operator==(const Paths&) const = default;
};

struct ClassifierParams {
    double C = 0.644;
    int epochs = 40;
    std::uint64_t seed = 7;
    std::size_t folds = 5;
    std::vector<double> C_grid;  // non-empty: pick C by cross-validated grid search

    bool operator==(const ClassifierParams&) const = default;
};

struct PipelineConfig {
    Paths paths;
    std::set<std::string> tag_filter = {"android"};
    clone::MatchConfig match;
    ClassifierParams classifier;
    rules::Context context = rules::Context::Any;
    std::vector<std::string> warning_lexicon;
    std::size_t jobs = 1;

    bool operator==(const PipelineConfig& o) const;

    fs::path model_path() const;
    /// Every input path must exist and every parameter be in range;
    /// throws ConfigError naming the first problem.
    void validate() const;
};

PipelineConfig default_config();

/// Relative paths in `j` are resolved against `base_dir`.
PipelineConfig config_from_json(const nlohmann::json& j, const fs::path& base_dir);
nlohmann::json to_json(const PipelineConfig& c);
PipelineConfig load_config(const fs::path& file);

enum class Stage { Ingest, Filter, Label, Train, Classify, Compile, Detect, Report };

const std::vector<Stage>& all_stages();
std::string to_string(Stage s);
Stage stage_from_string(const std::string& s);

/// Artifact files, relative to the output directory (model.json may be
/// redirected by paths.model).
namespace artifact {
inline constexpr const char* kSnippets = "snippets.jsonl";
inline constexpr const char* kRelated = "related.jsonl";
inline constexpr const char* kLabels = "labels.jsonl";
inline constexpr const char* kModel = "model.json";
inline constexpr const char* kTraining = "training.json";
inline constexpr const char* kClassified = "classified.jsonl";
inline constexpr const char* kSnippetIr = "snippet_ir.jsonl";
inline constexpr const char* kCorpusIr = "corpus_ir.jsonl";
inline constexpr const char* kMatches = "matches.jsonl";
inline constexpr const char* kSummary = "summary.json";
inline constexpr const char* kFeedback = "feedback.json";
inline constexpr const char* kCategoriesCsv = "categories.csv";
inline constexpr const char* kFeedbackCsv = "feedback.csv";
inline constexpr const char* kManifest = "manifest.json";
}  // namespace artifact

struct StageResult {
    Stage stage = Stage::Ingest;
    bool skipped = false;
    std::vector<std::string> outputs;
    std::string note;  // one-line human summary
};

class Pipeline {
public:
    /// Validates the config; throws ConfigError.
    explicit Pipeline(PipelineConfig cfg);

    /// Runs one stage after checking its upstream artifacts. Throws
    /// UpstreamError when one is missing or stale. Unchanged inputs make it
    /// a no-op unless `force`.
    StageResult run_stage(Stage s, bool force = false);

    /// Runs [from, to] in order.
    std::vector<StageResult> run(Stage from, Stage to, bool force = false);

    const PipelineConfig& config() const noexcept { return cfg_; }

private:
    PipelineConfig cfg_;
};

/// Content hash of a file, or of every regular file below a directory
/// (relative path and bytes, in path order).
std::uint64_t hash_path(const fs::path& p);

/// First line of a JSON-lines artifact.
nlohmann::json artifact_header(const std::string& name, Stage stage, std::size_t records);

/// Reads a JSON-lines artifact and checks its header; throws DataError.
std::vector<nlohmann::json> read_jsonl(const fs::path& file, const std::string& expected_name);

}  // namespace snipsec::pipeline
