#include "fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"

namespace snipsec::testing {

fs::path fixture_dir()
{
    return SNIPSEC_FIXTURE_DIR;
}

fs::path registry_path()
{
    return SNIPSEC_REGISTRY_PATH;
}

const api::ApiRegistry& registry()
{
    static const api::ApiRegistry reg = api::load_registry(registry_path());
    return reg;
}

std::string read_text(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& p, const std::string& text)
{
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

std::vector<RuleFixture> rule_fixtures()
{
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(fixture_dir() / "rules")) {
        if (e.path().extension() == ".java") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<RuleFixture> out;
    for (const auto& f : files) {
        RuleFixture fx;
        fx.name = f.stem().string();
        std::istringstream in(read_text(f));
        std::string line;
        std::string code;
        while (std::getline(in, line)) {
            auto header = [&](const std::string& key) -> std::optional<std::string> {
                const std::string prefix = "// " + key + ": ";
                if (line.rfind(prefix, 0) == 0) {
                    return line.substr(prefix.size());
                }
                return std::nullopt;
            };
            if (auto v = header("rule")) {
                fx.rule_id = *v;
            } else if (auto v = header("context")) {
                fx.context = rules::context_from_string(*v);
            } else if (auto v = header("expected")) {
                fx.expected = rules::label_from_string(*v);
            } else {
                code += line + "\n";
            }
        }
        fx.code = code;
        out.push_back(std::move(fx));
    }
    return out;
}

std::vector<LabeledSnippet> labeled_corpus()
{
    std::vector<LabeledSnippet> out;
    std::istringstream in(read_text(fixture_dir() / "labeled_corpus.jsonl"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto j = nlohmann::json::parse(line);
        out.push_back({j.at("snippet_id").get<std::string>(), j.at("code_text").get<std::string>(),
                       j.at("label").get<std::string>() == "insecure" ? 1 : -1});
    }
    return out;
}

TempDir::TempDir(const std::string& tag)
{
    static std::atomic<int> counter{0};
    const auto base = fs::temp_directory_path();
    for (;;) {
        auto p = base / ("snipsec-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        if (fs::create_directory(p)) {
            path_ = p;
            return;
        }
    }
}

TempDir::~TempDir()
{
    std::error_code ec;
    fs::remove_all(path_, ec);
}

pipeline::PipelineConfig fixture_config(const fs::path& output)
{
    auto c = pipeline::load_config(fixture_dir() / "pipeline.json");
    c.paths.output = output;
    return c;
}

std::vector<std::pair<std::string, std::string>> snapshot(const fs::path& dir)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            out.emplace_back(fs::relative(e.path(), dir).generic_string(), read_text(e.path()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace snipsec::testing
