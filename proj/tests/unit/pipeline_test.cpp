#include <fstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "snipsec/common.hpp"
#include "snipsec/pipeline.hpp"

namespace {

using namespace snipsec;
using namespace snipsec::pipeline;
namespace st = snipsec::testing;

nlohmann::json read_json(const fs::path& p)
{
    return nlohmann::json::parse(st::read_text(p));
}

TEST(PipelineConfig, JsonRoundTrip)
{
    const auto c = st::fixture_config("/tmp/out");
    const auto back = config_from_json(to_json(c), "/");
    EXPECT_EQ(back, c);
}

TEST(PipelineConfig, RelativePathsResolveAgainstConfigDir)
{
    const auto c = load_config(st::fixture_dir() / "pipeline.json");
    EXPECT_TRUE(c.paths.dump.is_absolute());
    EXPECT_TRUE(fs::exists(c.paths.dump));
    EXPECT_TRUE(fs::exists(c.paths.registry));
}

TEST(PipelineConfig, UnknownKeyIsAConfigError)
{
    auto j = to_json(st::fixture_config("/tmp/out"));
    j["colour"] = "blue";
    EXPECT_THROW(config_from_json(j, "/"), ConfigError);
}

TEST(PipelineConfig, ValidateNamesProblems)
{
    auto c = st::fixture_config("/tmp/out");
    EXPECT_NO_THROW(c.validate());
    auto bad = c;
    bad.paths.dump = "/nonexistent/posts.xml";
    EXPECT_THROW(bad.validate(), ConfigError);
    bad = c;
    bad.classifier.C = 0.0;
    EXPECT_THROW(bad.validate(), ConfigError);
    bad = c;
    bad.jobs = 0;
    EXPECT_THROW(bad.validate(), ConfigError);
    bad = c;
    bad.match.similarity_threshold = 2.0;
    EXPECT_THROW(Pipeline{bad}, ConfigError);
}

TEST(PipelineStages, NamesRoundTrip)
{
    EXPECT_EQ(all_stages().size(), 8u);
    for (auto s : all_stages()) {
        EXPECT_EQ(stage_from_string(to_string(s)), s);
    }
    EXPECT_THROW(stage_from_string("nope"), ConfigError);
}

class PipelineRun : public ::testing::Test {
protected:
    static void SetUpTestSuite()
    {
        dir_ = new st::TempDir("pipeline-test");
        Pipeline(st::fixture_config(dir_->path())).run(Stage::Ingest, Stage::Report);
    }
    static void TearDownTestSuite()
    {
        delete dir_;
        dir_ = nullptr;
    }
    static st::TempDir* dir_;
};

st::TempDir* PipelineRun::dir_ = nullptr;

TEST_F(PipelineRun, TlsShareOnFixtureCorpus)
{
    const auto s = read_json(dir_->path() / artifact::kSummary).at("summary");
    const auto& tls = s.at("categories").at("tls");
    EXPECT_EQ(tls.at("insecure_apps").get<int>(), 6);
    EXPECT_DOUBLE_EQ(tls.at("insecure_pct").get<double>(), 30.0);
    EXPECT_EQ(s.at("apps_with_clone").get<int>(), 16);
}

TEST_F(PipelineRun, ArtifactsCarryHeaders)
{
    const auto rows = read_jsonl(dir_->path() / artifact::kMatches, artifact::kMatches);
    EXPECT_EQ(rows.size(), 18u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto a = std::make_pair(rows[i - 1].at("snippet_id").get<std::string>(),
                                      rows[i - 1].at("app_id").get<std::string>());
        const auto b = std::make_pair(rows[i].at("snippet_id").get<std::string>(),
                                      rows[i].at("app_id").get<std::string>());
        EXPECT_LT(a, b);
    }
    EXPECT_THROW(read_jsonl(dir_->path() / artifact::kMatches, artifact::kLabels), DataError);
}

TEST_F(PipelineRun, RerunSkipsUnchangedStages)
{
    Pipeline p(st::fixture_config(dir_->path()));
    for (const auto& r : p.run(Stage::Ingest, Stage::Report)) {
        EXPECT_TRUE(r.skipped) << to_string(r.stage);
    }
    EXPECT_FALSE(p.run_stage(Stage::Report, true).skipped);
}

TEST(PipelineUpstream, MissingUpstreamNamesProducer)
{
    st::TempDir d("pipeline-missing");
    Pipeline p(st::fixture_config(d.path()));
    auto expect_named = [&](const std::string& stage) {
        try {
            p.run_stage(Stage::Detect);
            FAIL() << "expected UpstreamError";
        } catch (const UpstreamError& e) {
            EXPECT_NE(std::string(e.what()).find("'" + stage + "'"), std::string::npos) << e.what();
        }
    };
    // nothing has run: the earliest stage is named
    expect_named("ingest");
    p.run(Stage::Ingest, Stage::Classify);
    expect_named("compile");
}

TEST(PipelineUpstream, ModifiedArtifactIsRefused)
{
    st::TempDir d("pipeline-modified");
    Pipeline p(st::fixture_config(d.path()));
    p.run(Stage::Ingest, Stage::Filter);
    {
        std::ofstream out(d.path() / artifact::kSnippets, std::ios::app);
        out << "\n";
    }
    for (auto s : {Stage::Filter, Stage::Label}) {
        try {
            p.run_stage(s);
            FAIL() << "expected UpstreamError from " << to_string(s);
        } catch (const UpstreamError& e) {
            EXPECT_NE(std::string(e.what()).find("'ingest'"), std::string::npos) << e.what();
        }
    }
}

TEST(PipelineUpstream, ChangedParamsMakeDownstreamStale)
{
    st::TempDir d("pipeline-stale");
    auto c = st::fixture_config(d.path());
    Pipeline(c).run(Stage::Ingest, Stage::Filter);
    c.tag_filter = {"android", "java"};
    try {
        Pipeline(c).run_stage(Stage::Label);
        FAIL() << "expected UpstreamError";
    } catch (const UpstreamError& e) {
        EXPECT_NE(std::string(e.what()).find("ingest"), std::string::npos) << e.what();
    }
}

TEST(PipelineUpstream, HashPathCoversDirectories)
{
    st::TempDir d("pipeline-hash");
    st::write_text(d.path() / "a" / "x.txt", "one");
    const auto h1 = hash_path(d.path());
    st::write_text(d.path() / "a" / "x.txt", "two");
    const auto h2 = hash_path(d.path());
    EXPECT_NE(h1, h2);
    fs::rename(d.path() / "a" / "x.txt", d.path() / "a" / "y.txt");
    EXPECT_NE(hash_path(d.path()), h2);
}

}  // namespace
