#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "snipsec/classifier.hpp"
#include "snipsec/common.hpp"

namespace {

using namespace snipsec;
using namespace snipsec::classify;

TEST(Classifier, TokenizeSplitsIdentifiersAndPunctuation)
{
    const auto d = tokenize("// comment\nCipher c = Cipher.getInstance(\"AES/ECB\"); /* x */", "s1");
    EXPECT_EQ(d.snippet_id, "s1");
    const std::vector<std::string> want = {"Cipher", "c", "=", "Cipher", ".", "getInstance", "(", "\"",
                                           "AES", "/", "ECB", "\"", ")", ";"};
    EXPECT_EQ(d.tokens, want);
}

TEST(Classifier, VocabularyIdfAndVectorize)
{
    const std::vector<TokenDocument> docs = {{"a", {"x", "y"}}, {"b", {"x", "x"}}};
    const auto v = fit_vocabulary(docs);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v.tokens[0], "x");
    EXPECT_DOUBLE_EQ(v.idf[0], std::log(3.0 / 3.0) + 1.0);
    EXPECT_DOUBLE_EQ(v.idf[1], std::log(3.0 / 2.0) + 1.0);
    const auto fv = vectorize({"q", {"x", "y", "unseen"}}, v);
    EXPECT_NEAR(fv.norm(), 1.0, 1e-12);
    ASSERT_EQ(fv.entries.size(), 2u);
    EXPECT_THROW(fit_vocabulary({}), DataError);
}

TEST(Classifier, ConfusionMatrixMetrics)
{
    const auto cm = confusion({1, 1, -1, -1, 1}, {1, -1, -1, 1, 1});
    EXPECT_EQ(cm.tp, 2u);
    EXPECT_EQ(cm.fn, 1u);
    EXPECT_EQ(cm.tn, 1u);
    EXPECT_EQ(cm.fp, 1u);
    EXPECT_DOUBLE_EQ(cm.accuracy(), 0.6);
    EXPECT_DOUBLE_EQ(cm.precision(), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(cm.recall(), 2.0 / 3.0);
    EXPECT_EQ(ConfusionMatrix{}.precision(), 0.0);
}

TEST(Classifier, ConfusionFromPublishedCells)
{
    ConfusionMatrix cm{65, 7, 181, 19};
    EXPECT_NEAR(cm.accuracy(), 0.904, 5e-4);
    EXPECT_NEAR(cm.precision(), 0.903, 5e-4);
}

TrainingSet random_set(std::mt19937_64& rng, std::size_t n, std::size_t dim)
{
    std::normal_distribution<double> g(0.0, 1.0);
    TrainingSet ts;
    ts.dim = dim;
    for (std::size_t i = 0; i < n; ++i) {
        FeatureVector fv;
        for (std::size_t k = 0; k < dim; ++k) {
            fv.entries.emplace_back(k, g(rng));
        }
        ts.x.push_back(fv);
        ts.y.push_back(i % 2 == 0 ? 1 : -1);
    }
    return ts;
}

TEST(Classifier, SubgradientMatchesFiniteDifferences)
{
    std::mt19937_64 rng(3);
    const auto ts = random_set(rng, 10, 4);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> w = {g(rng), g(rng), g(rng), g(rng)};
    const double b = 0.1;
    const auto sg = subgradient(ts, w, b, 2.0);
    const double h = 1e-6;
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto wp = w;
        auto wm = w;
        wp[k] += h;
        wm[k] -= h;
        const double num = (objective(ts, wp, b, 2.0) - objective(ts, wm, b, 2.0)) / (2 * h);
        EXPECT_NEAR(sg.w[k], num, 1e-4);
    }
    const double nb = (objective(ts, w, b + h, 2.0) - objective(ts, w, b - h, 2.0)) / (2 * h);
    EXPECT_NEAR(sg.b, nb, 1e-4);
}

TEST(Classifier, ObjectiveByHand)
{
    TrainingSet ts;
    ts.dim = 1;
    ts.x = {FeatureVector{{{0, 1.0}}}, FeatureVector{{{0, -1.0}}}};
    ts.y = {1, -1};
    // w = 0.5: margins 0.5 each, hinge 0.5 each
    EXPECT_DOUBLE_EQ(objective(ts, {0.5}, 0.0, 2.0), 0.125 + 2.0 * 1.0);
}

TEST(Classifier, TrainSeparatesToyData)
{
    std::vector<TokenDocument> docs;
    std::vector<int> y;
    for (int i = 0; i < 10; ++i) {
        docs.push_back(tokenize("bad ECB setSeed v" + std::to_string(i)));
        y.push_back(1);
        docs.push_back(tokenize("good GCM nextBytes v" + std::to_string(i)));
        y.push_back(-1);
    }
    const auto vocab = fit_vocabulary(docs);
    const auto ts = make_training_set(docs, y, vocab);
    const auto m = train(ts, vocab, 1.0, 20, 5);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_EQ(predict(m, ts.x[i]).label, ts.y[i]);
    }
    EXPECT_EQ(predict_code(m, "x = ECB; setSeed(1);").label, 1);
    EXPECT_EQ(predict_code(m, "x = GCM; nextBytes(b);").label, -1);
    // same seed, same model
    const auto again = train(ts, vocab, 1.0, 20, 5);
    EXPECT_EQ(again.w, m.w);
    EXPECT_EQ(again.b, m.b);
}

TEST(Classifier, TrainingSetValidation)
{
    TrainingSet ts;
    ts.dim = 1;
    ts.x = {FeatureVector{{{0, 1.0}}}, FeatureVector{{{0, 1.0}}}};
    ts.y = {1, 1};
    EXPECT_THROW(ts.validate(), DataError);  // one class
    ts.y = {1, 2};
    EXPECT_THROW(ts.validate(), DataError);
    ts.y = {1, -1};
    ts.x[1].entries[0].first = 5;
    EXPECT_THROW(ts.validate(), DataError);
}

TEST(Classifier, StratifiedFoldsPartitionAndBalance)
{
    std::vector<int> labels;
    for (int i = 0; i < 23; ++i) {
        labels.push_back(i < 8 ? 1 : -1);
    }
    const auto folds = stratified_folds(labels, 4, 9);
    ASSERT_EQ(folds.size(), 4u);
    std::vector<int> seen(labels.size(), 0);
    for (const auto& f : folds) {
        int pos = 0;
        for (auto i : f) {
            ++seen[i];
            pos += labels[i] > 0 ? 1 : 0;
        }
        EXPECT_GE(pos, 2);
        EXPECT_LE(pos, 2);
    }
    for (int s : seen) {
        EXPECT_EQ(s, 1);
    }
    EXPECT_EQ(folds, stratified_folds(labels, 4, 9));
    EXPECT_THROW(stratified_folds(labels, 1, 9), DataError);
    EXPECT_THROW(stratified_folds(labels, 9, 9), DataError);
}

TEST(Classifier, GridSearchValidatesGrid)
{
    std::vector<TokenDocument> docs = {tokenize("a"), tokenize("b"), tokenize("a"), tokenize("b")};
    std::vector<int> y = {1, -1, 1, -1};
    EXPECT_THROW(grid_search_C(docs, y, {}, 2, 5, 1), ConfigError);
    EXPECT_THROW(grid_search_C(docs, y, {1.0, -1.0}, 2, 5, 1), ConfigError);
    const auto g = grid_search_C(docs, y, {10.0, 1.0, 1.0}, 2, 5, 1);
    EXPECT_EQ(g.mean_accuracy.size(), 2u);
    EXPECT_EQ(g.mean_accuracy.front().first, 1.0);
    EXPECT_EQ(g.best_C, 1.0);  // tie goes to the smaller C
}

TEST(Classifier, ModelJsonRoundTrip)
{
    std::vector<TokenDocument> docs = {tokenize("a b"), tokenize("c d"), tokenize("a c")};
    const auto vocab = fit_vocabulary(docs);
    const auto ts = make_training_set(docs, {1, -1, 1}, vocab);
    const auto m = train(ts, vocab, 0.644, 5, 2);
    const auto back = model_from_json(to_json(m));
    EXPECT_EQ(back.w, m.w);
    EXPECT_EQ(back.b, m.b);
    EXPECT_EQ(back.vocab.tokens, m.vocab.tokens);
    EXPECT_EQ(back.vocab.idf, m.vocab.idf);
    EXPECT_EQ(predict_code(back, "a b").margin, predict_code(m, "a b").margin);
}

}  // namespace
