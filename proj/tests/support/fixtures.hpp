#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "snipsec/pipeline.hpp"
#include "snipsec/registry.hpp"
#include "snipsec/rules.hpp"

namespace snipsec::testing {

namespace fs = std::filesystem;

fs::path fixture_dir();
fs::path registry_path();
const api::ApiRegistry& registry();

std::string read_text(const fs::path& p);
void write_text(const fs::path& p, const std::string& text);

/// One rule-table fixture: a `// rule:`, `// context:`, `// expected:`
/// header followed by the code.
struct RuleFixture {
    std::string name;
    std::string rule_id;
    rules::Context context = rules::Context::Any;
    rules::Label expected = rules::Label::Secure;
    std::string code;
};

std::vector<RuleFixture> rule_fixtures();

struct LabeledSnippet {
    std::string id;
    std::string code;
    int label = 0;  // +1 insecure, -1 secure
};

std::vector<LabeledSnippet> labeled_corpus();

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const noexcept { return path_; }

private:
    fs::path path_;
};

/// The bundled fixture config with its output redirected.
pipeline::PipelineConfig fixture_config(const fs::path& output);

/// Relative path -> bytes for every regular file below `dir`.
std::vector<std::pair<std::string, std::string>> snapshot(const fs::path& dir);

}  // namespace snipsec::testing
