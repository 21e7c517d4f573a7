#pragma once

// tf-idf features over code tokens and a linear SVM trained with stochastic
// subgradient descent. Insecure is the positive class (+1).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace snipsec::classify {

struct TokenDocument {
    std::string snippet_id;
    std::vector<std::string> tokens;
};

/// Comments removed; maximal [A-Za-z0-9_$] runs plus single punctuation
/// characters. String literal contents are split the same way.
TokenDocument tokenize(std::string_view code_text, std::string snippet_id = {});

struct Vocabulary {
    std::map<std::string, std::size_t> index;
    std::vector<std::string> tokens;  // by index
    std::vector<double> idf;
    std::size_t n_documents = 0;

    std::size_t size() const noexcept { return tokens.size(); }
};

/// Smoothed idf: ln((1+N)/(1+df)) + 1. Indices follow lexicographic token
/// order. Throws DataError on an empty corpus.
Vocabulary fit_vocabulary(const std::vector<TokenDocument>& docs);

struct FeatureVector {
    std::vector<std::pair<std::size_t, double>> entries;  // strictly increasing index

    double dot(const std::vector<double>& w) const;
    double norm() const;
};

/// count * idf per known token, L2-normalized. Unseen tokens are ignored.
FeatureVector vectorize(const TokenDocument& doc, const Vocabulary& vocab);

struct TrainingSet {
    std::vector<FeatureVector> x;
    std::vector<int> y;  // +1 insecure, -1 secure
    std::size_t dim = 0;

    std::size_t size() const noexcept { return y.size(); }
    /// Throws DataError unless |x| = |y| >= 2, labels are +-1, both classes
    /// appear, indices are below dim and weights are finite.
    void validate() const;
};

TrainingSet make_training_set(const std::vector<TokenDocument>& docs, const std::vector<int>& labels,
                              const Vocabulary& vocab);

struct SvmModel {
    std::vector<double> w;
    double b = 0.0;
    double C = 0.644;
    Vocabulary vocab;
    int epochs = 0;
    std::uint64_t seed = 0;
    std::size_t trained_positive = 0;
    std::size_t trained_negative = 0;
    double final_objective = 0.0;
};

/// 1/2 |w|^2 + C * sum_i max(0, 1 - y_i (w.x_i + b))
double objective(const TrainingSet& ts, const std::vector<double>& w, double b, double C);

struct Subgradient {
    std::vector<double> w;
    double b = 0.0;
};

/// Subgradient of objective(); samples exactly on the hinge count as inactive.
Subgradient subgradient(const TrainingSet& ts, const std::vector<double>& w, double b, double C);

/// Pegasos-style SGD: eta_t = 1/(lambda t), lambda = 1/(n C), unregularized
/// bias, seeded shuffles per epoch. Returns the iterate (last or running
/// average, checked at each epoch end) with the lowest objective.
SvmModel train(const TrainingSet& ts, const Vocabulary& vocab, double C, int epochs, std::uint64_t seed);

struct Prediction {
    int label = 1;
    double margin = 0.0;
};

/// label = sign(w.x + b), ties toward +1. Throws DataError when the vector
/// indexes beyond the model's vocabulary.
Prediction predict(const SvmModel& model, const FeatureVector& fv);
Prediction predict_code(const SvmModel& model, std::string_view code_text);

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + fp + tn + fn; }
    double accuracy() const noexcept;
    double precision() const noexcept;  // 0 when nothing was predicted positive
    double recall() const noexcept;     // 0 when there are no positives
};

ConfusionMatrix confusion(const std::vector<int>& truth, const std::vector<int>& predicted);

/// Stratified split: each class is shuffled with `seed` and dealt
/// round-robin. Throws DataError when k < 2 or k exceeds a class count.
std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<int>& labels, std::size_t k,
                                                       std::uint64_t seed);

struct CvResult {
    std::vector<ConfusionMatrix> folds;
    double mean_accuracy = 0.0;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
};

/// Folds over a fixed feature space.
CvResult cross_validate(const TrainingSet& ts, std::size_t k, double C, int epochs, std::uint64_t seed);
/// Folds over raw documents; the vocabulary is refit on each training split.
CvResult cross_validate(const std::vector<TokenDocument>& docs, const std::vector<int>& labels, std::size_t k,
                        double C, int epochs, std::uint64_t seed);

struct GridSearchResult {
    double best_C = 0.0;
    std::vector<std::pair<double, double>> mean_accuracy;  // (C, accuracy), ascending C
};

/// Deduplicated grid; ties go to the smaller C. Throws ConfigError on an
/// empty grid or a non-positive C.
GridSearchResult grid_search_C(const std::vector<TokenDocument>& docs, const std::vector<int>& labels,
                               std::vector<double> grid, std::size_t k, int epochs, std::uint64_t seed);

nlohmann::json to_json(const SvmModel& m);
SvmModel model_from_json(const nlohmann::json& j);

}  // namespace snipsec::classify
