#include <fstream>
#include <random>
#include <sstream>

#include <benchmark/benchmark.h>
#include <nlohmann/json.hpp>

#include "snipsec/classifier.hpp"
#include "snipsec/clone.hpp"
#include "snipsec/ir.hpp"
#include "snipsec/registry.hpp"

namespace {

using namespace snipsec;

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const api::ApiRegistry& reg()
{
    static const auto r = api::load_registry(SNIPSEC_REGISTRY_PATH);
    return r;
}

const std::string kFixtures = SNIPSEC_FIXTURE_DIR;

void BM_JaccardSimilarity(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> d(0, 6);
    clone::SemanticVector a{};
    clone::SemanticVector b{};
    for (auto& v : a) v = d(rng);
    for (auto& v : b) v = d(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(clone::jaccard_similarity(a, b));
    }
}
BENCHMARK(BM_JaccardSimilarity);

void BM_CompileSnippet(benchmark::State& state)
{
    const auto code = slurp(kFixtures + "/listings/listing1.java");
    for (auto _ : state) {
        benchmark::DoNotOptimize(ir::compile_snippet(code, reg()));
    }
}
BENCHMARK(BM_CompileSnippet);

void BM_MatchSnippet(benchmark::State& state)
{
    const auto sc = ir::compile_snippet(slurp(kFixtures + "/listings/listing4.java"), reg());
    const auto ac = ir::compile(slurp(kFixtures + "/listings/listing4_app.java"), reg());
    const auto s = clone::make_snippet("s", sc.methods);
    const auto app = clone::make_app("a", ac.methods, ac.classes);
    const clone::MatchConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(clone::match_snippet(s, app, cfg));
    }
}
BENCHMARK(BM_MatchSnippet);

void BM_MatchMethod(benchmark::State& state)
{
    const auto sc = ir::compile_snippet(slurp(kFixtures + "/threshold/snippet.java"), reg());
    const auto ac = ir::compile(slurp(kFixtures + "/threshold/one_extra_node.java"), reg());
    const auto s = clone::make_snippet("s", sc.methods);
    const auto app = clone::make_app("a", ac.methods, ac.classes);
    clone::MatchConfig cfg;
    cfg.similarity_threshold = 0.9;
    for (auto _ : state) {
        for (const auto& am : app.methods) {
            benchmark::DoNotOptimize(clone::match_method(s.methods.front(), am, cfg));
        }
    }
}
BENCHMARK(BM_MatchMethod);

void BM_TrainCorpus(benchmark::State& state)
{
    std::vector<classify::TokenDocument> docs;
    std::vector<int> y;
    std::ifstream in(kFixtures + "/labeled_corpus.jsonl");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto j = nlohmann::json::parse(line);
        docs.push_back(classify::tokenize(j.at("code_text").get<std::string>()));
        y.push_back(j.at("label").get<std::string>() == "insecure" ? 1 : -1);
    }
    const auto vocab = classify::fit_vocabulary(docs);
    const auto ts = classify::make_training_set(docs, y, vocab);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify::train(ts, vocab, 100.0, 40, 7));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ts.size()));
}
BENCHMARK(BM_TrainCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
