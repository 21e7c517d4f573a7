#include "snipsec/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"
#include "snipsec/java_lexer.hpp"

namespace snipsec::classify {

namespace {

bool word_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$';
}

// Fisher-Yates driven by mt19937_64 so runs are identical across standard
// library implementations.
void shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

double margin_of(const FeatureVector& x, const std::vector<double>& w, double b)
{
    return x.dot(w) + b;
}

}  // namespace

TokenDocument tokenize(std::string_view code_text, std::string snippet_id)
{
    TokenDocument doc;
    doc.snippet_id = std::move(snippet_id);
    const std::string text = java::strip_comments(code_text);
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
        } else if (word_char(c)) {
            std::size_t j = i;
            while (j < text.size() && word_char(text[j])) {
                ++j;
            }
            doc.tokens.emplace_back(text.substr(i, j - i));
            i = j;
        } else {
            doc.tokens.emplace_back(1, c);
            ++i;
        }
    }
    return doc;
}

Vocabulary fit_vocabulary(const std::vector<TokenDocument>& docs)
{
    if (docs.empty()) {
        throw DataError("cannot fit a vocabulary on an empty corpus");
    }
    std::map<std::string, std::size_t> df;
    for (const auto& d : docs) {
        std::set<std::string> seen(d.tokens.begin(), d.tokens.end());
        for (const auto& t : seen) {
            ++df[t];
        }
    }
    Vocabulary v;
    v.n_documents = docs.size();
    const double n = static_cast<double>(docs.size());
    for (const auto& [tok, count] : df) {
        v.index.emplace(tok, v.tokens.size());
        v.tokens.push_back(tok);
        v.idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
    }
    return v;
}

double FeatureVector::dot(const std::vector<double>& w) const
{
    double s = 0.0;
    for (const auto& [i, x] : entries) {
        s += w[i] * x;
    }
    return s;
}

double FeatureVector::norm() const
{
    double s = 0.0;
    for (const auto& [i, x] : entries) {
        s += x * x;
    }
    return std::sqrt(s);
}

FeatureVector vectorize(const TokenDocument& doc, const Vocabulary& vocab)
{
    std::map<std::size_t, double> counts;
    for (const auto& t : doc.tokens) {
        auto it = vocab.index.find(t);
        if (it != vocab.index.end()) {
            counts[it->second] += 1.0;
        }
    }
    FeatureVector fv;
    fv.entries.reserve(counts.size());
    double sq = 0.0;
    for (const auto& [i, c] : counts) {
        const double wgt = c * vocab.idf[i];
        fv.entries.emplace_back(i, wgt);
        sq += wgt * wgt;
    }
    if (sq > 0.0) {
        const double norm = std::sqrt(sq);
        for (auto& e : fv.entries) {
            e.second /= norm;
        }
    }
    return fv;
}

void TrainingSet::validate() const
{
    if (x.size() != y.size()) {
        throw DataError("training set: feature and label counts differ");
    }
    if (y.size() < 2) {
        throw DataError("training set needs at least two samples");
    }
    bool pos = false;
    bool neg = false;
    for (int label : y) {
        if (label == 1) {
            pos = true;
        } else if (label == -1) {
            neg = true;
        } else {
            throw DataError("training labels must be +1 or -1");
        }
    }
    if (!pos || !neg) {
        throw DataError("training set must contain both classes");
    }
    for (const auto& fv : x) {
        for (const auto& [i, v] : fv.entries) {
            if (i >= dim) {
                throw DataError("feature index outside the vocabulary");
            }
            if (!std::isfinite(v)) {
                throw DataError("non-finite feature value");
            }
        }
    }
}

TrainingSet make_training_set(const std::vector<TokenDocument>& docs, const std::vector<int>& labels,
                              const Vocabulary& vocab)
{
    TrainingSet ts;
    ts.dim = vocab.size();
    ts.y = labels;
    ts.x.reserve(docs.size());
    for (const auto& d : docs) {
        ts.x.push_back(vectorize(d, vocab));
    }
    return ts;
}

double objective(const TrainingSet& ts, const std::vector<double>& w, double b, double C)
{
    double reg = 0.0;
    for (double v : w) {
        reg += v * v;
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        loss += std::max(0.0, 1.0 - ts.y[i] * margin_of(ts.x[i], w, b));
    }
    return 0.5 * reg + C * loss;
}

Subgradient subgradient(const TrainingSet& ts, const std::vector<double>& w, double b, double C)
{
    Subgradient g;
    g.w = w;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double y = ts.y[i];
        if (1.0 - y * margin_of(ts.x[i], w, b) > 0.0) {
            for (const auto& [j, v] : ts.x[i].entries) {
                g.w[j] -= C * y * v;
            }
            g.b -= C * y;
        }
    }
    return g;
}

SvmModel train(const TrainingSet& ts, const Vocabulary& vocab, double C, int epochs, std::uint64_t seed)
{
    if (!(C > 0.0) || !std::isfinite(C)) {
        throw ConfigError("penalty C must be positive");
    }
    if (epochs < 1) {
        throw ConfigError("epochs must be at least 1");
    }
    ts.validate();
    if (ts.dim != vocab.size()) {
        throw DataError("training set dimension does not match the vocabulary");
    }
    const std::size_t n = ts.size();
    const double lambda = 1.0 / (static_cast<double>(n) * C);

    std::vector<double> w(ts.dim, 0.0);
    double b = 0.0;
    std::vector<double> avg_w(ts.dim, 0.0);
    double avg_b = 0.0;

    std::vector<double> best_w = w;
    double best_b = b;
    double best_obj = objective(ts, w, b, C);

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::uint64_t t = 0;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        shuffle(order, rng);
        for (std::size_t idx : order) {
            ++t;
            const double eta = 1.0 / (lambda * static_cast<double>(t));
            const FeatureVector& x = ts.x[idx];
            const double y = ts.y[idx];
            const bool active = y * margin_of(x, w, b) < 1.0;
            const double shrink = 1.0 - eta * lambda;
            for (double& v : w) {
                v *= shrink;
            }
            if (active) {
                for (const auto& [j, v] : x.entries) {
                    w[j] += eta * y * v;
                }
                b += eta * y;
            }
            const double k = 1.0 / static_cast<double>(t);
            for (std::size_t j = 0; j < w.size(); ++j) {
                avg_w[j] += (w[j] - avg_w[j]) * k;
            }
            avg_b += (b - avg_b) * k;
        }
        const double obj_last = objective(ts, w, b, C);
        if (obj_last < best_obj) {
            best_obj = obj_last;
            best_w = w;
            best_b = b;
        }
        const double obj_avg = objective(ts, avg_w, avg_b, C);
        if (obj_avg < best_obj) {
            best_obj = obj_avg;
            best_w = avg_w;
            best_b = avg_b;
        }
    }

    SvmModel m;
    m.w = std::move(best_w);
    m.b = best_b;
    m.C = C;
    m.vocab = vocab;
    m.epochs = epochs;
    m.seed = seed;
    m.final_objective = best_obj;
    for (int label : ts.y) {
        (label > 0 ? m.trained_positive : m.trained_negative)++;
    }
    return m;
}

Prediction predict(const SvmModel& model, const FeatureVector& fv)
{
    for (const auto& [i, v] : fv.entries) {
        if (i >= model.w.size()) {
            throw DataError("feature vector does not match the model vocabulary");
        }
    }
    Prediction p;
    p.margin = fv.dot(model.w) + model.b;
    p.label = p.margin >= 0.0 ? 1 : -1;
    return p;
}

Prediction predict_code(const SvmModel& model, std::string_view code_text)
{
    return predict(model, vectorize(tokenize(code_text), model.vocab));
}

double ConfusionMatrix::accuracy() const noexcept
{
    return total() == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(total());
}

double ConfusionMatrix::precision() const noexcept
{
    return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double ConfusionMatrix::recall() const noexcept
{
    return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

ConfusionMatrix confusion(const std::vector<int>& truth, const std::vector<int>& predicted)
{
    if (truth.size() != predicted.size()) {
        throw DataError("confusion: truth and prediction lengths differ");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool t = truth[i] > 0;
        const bool p = predicted[i] > 0;
        if (t && p) {
            ++cm.tp;
        } else if (!t && p) {
            ++cm.fp;
        } else if (!t && !p) {
            ++cm.tn;
        } else {
            ++cm.fn;
        }
    }
    return cm;
}

std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<int>& labels, std::size_t k,
                                                       std::uint64_t seed)
{
    if (k < 2) {
        throw DataError("cross-validation needs k >= 2");
    }
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        (labels[i] > 0 ? pos : neg).push_back(i);
    }
    if (k > pos.size() || k > neg.size()) {
        throw DataError("k = " + std::to_string(k) + " exceeds a class count (" + std::to_string(pos.size()) +
                        " positive, " + std::to_string(neg.size()) + " negative)");
    }
    std::mt19937_64 rng(seed);
    shuffle(pos, rng);
    shuffle(neg, rng);
    std::vector<std::vector<std::size_t>> folds(k);
    std::size_t slot = 0;
    for (const auto* cls : {&pos, &neg}) {
        for (std::size_t i : *cls) {
            folds[slot % k].push_back(i);
            ++slot;
        }
    }
    for (auto& f : folds) {
        std::sort(f.begin(), f.end());
    }
    return folds;
}

namespace {

CvResult summarize(std::vector<ConfusionMatrix> folds)
{
    CvResult r;
    r.folds = std::move(folds);
    for (const auto& cm : r.folds) {
        r.mean_accuracy += cm.accuracy();
        r.mean_precision += cm.precision();
        r.mean_recall += cm.recall();
    }
    const double k = static_cast<double>(r.folds.size());
    r.mean_accuracy /= k;
    r.mean_precision /= k;
    r.mean_recall /= k;
    return r;
}

std::vector<bool> fold_mask(std::size_t n, const std::vector<std::size_t>& fold)
{
    std::vector<bool> in(n, false);
    for (std::size_t i : fold) {
        in[i] = true;
    }
    return in;
}

}  // namespace

CvResult cross_validate(const TrainingSet& ts, std::size_t k, double C, int epochs, std::uint64_t seed)
{
    ts.validate();
    auto folds = stratified_folds(ts.y, k, seed);
    Vocabulary dummy;
    dummy.tokens.resize(ts.dim);
    dummy.idf.assign(ts.dim, 1.0);
    std::vector<ConfusionMatrix> cms;
    for (const auto& fold : folds) {
        auto in = fold_mask(ts.size(), fold);
        TrainingSet train_set;
        train_set.dim = ts.dim;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!in[i]) {
                train_set.x.push_back(ts.x[i]);
                train_set.y.push_back(ts.y[i]);
            }
        }
        auto model = train(train_set, dummy, C, epochs, seed);
        std::vector<int> truth;
        std::vector<int> pred;
        for (std::size_t i : fold) {
            truth.push_back(ts.y[i]);
            pred.push_back(predict(model, ts.x[i]).label);
        }
        cms.push_back(confusion(truth, pred));
    }
    return summarize(std::move(cms));
}

CvResult cross_validate(const std::vector<TokenDocument>& docs, const std::vector<int>& labels, std::size_t k,
                        double C, int epochs, std::uint64_t seed)
{
    if (docs.size() != labels.size()) {
        throw DataError("cross-validation: document and label counts differ");
    }
    auto folds = stratified_folds(labels, k, seed);
    std::vector<ConfusionMatrix> cms;
    for (const auto& fold : folds) {
        auto in = fold_mask(docs.size(), fold);
        std::vector<TokenDocument> train_docs;
        std::vector<int> train_labels;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (!in[i]) {
                train_docs.push_back(docs[i]);
                train_labels.push_back(labels[i]);
            }
        }
        auto vocab = fit_vocabulary(train_docs);
        auto ts = make_training_set(train_docs, train_labels, vocab);
        auto model = train(ts, vocab, C, epochs, seed);
        std::vector<int> truth;
        std::vector<int> pred;
        for (std::size_t i : fold) {
            truth.push_back(labels[i]);
            pred.push_back(predict(model, vectorize(docs[i], vocab)).label);
        }
        cms.push_back(confusion(truth, pred));
    }
    return summarize(std::move(cms));
}

GridSearchResult grid_search_C(const std::vector<TokenDocument>& docs, const std::vector<int>& labels,
                               std::vector<double> grid, std::size_t k, int epochs, std::uint64_t seed)
{
    if (grid.empty()) {
        throw ConfigError("grid search needs at least one C value");
    }
    for (double c : grid) {
        if (!(c > 0.0) || !std::isfinite(c)) {
            throw ConfigError("grid values must be positive");
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    GridSearchResult r;
    double best = -1.0;
    for (double c : grid) {
        const double acc = cross_validate(docs, labels, k, c, epochs, seed).mean_accuracy;
        r.mean_accuracy.emplace_back(c, acc);
        if (acc > best) {
            best = acc;
            r.best_C = c;
        }
    }
    return r;
}

nlohmann::json to_json(const SvmModel& m)
{
    nlohmann::json vocab = nlohmann::json::array();
    for (std::size_t i = 0; i < m.vocab.size(); ++i) {
        vocab.push_back({{"token", m.vocab.tokens[i]}, {"idf", m.vocab.idf[i]}, {"weight", m.w[i]}});
    }
    return nlohmann::json{{"format", "snipsec-svm"},
                          {"version", 1},
                          {"C", m.C},
                          {"b", m.b},
                          {"epochs", m.epochs},
                          {"seed", m.seed},
                          {"n_documents", m.vocab.n_documents},
                          {"objective", m.final_objective},
                          {"trained_on", {{"positive", m.trained_positive}, {"negative", m.trained_negative}}},
                          {"vocab", vocab}};
}

SvmModel model_from_json(const nlohmann::json& j)
{
    try {
        if (j.at("format").get<std::string>() != "snipsec-svm" || j.at("version").get<int>() != 1) {
            throw DataError("unsupported model format");
        }
        SvmModel m;
        m.C = j.at("C").get<double>();
        m.b = j.at("b").get<double>();
        m.epochs = j.at("epochs").get<int>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.vocab.n_documents = j.at("n_documents").get<std::size_t>();
        m.final_objective = j.value("objective", 0.0);
        m.trained_positive = j.at("trained_on").at("positive").get<std::size_t>();
        m.trained_negative = j.at("trained_on").at("negative").get<std::size_t>();
        for (const auto& e : j.at("vocab")) {
            const auto tok = e.at("token").get<std::string>();
            if (!m.vocab.index.emplace(tok, m.vocab.tokens.size()).second) {
                throw DataError("duplicate vocabulary token in model: " + tok);
            }
            m.vocab.tokens.push_back(tok);
            m.vocab.idf.push_back(e.at("idf").get<double>());
            m.w.push_back(e.at("weight").get<double>());
        }
        if (!(m.C > 0.0)) {
            throw DataError("model C must be positive");
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed model: ") + e.what());
    }
}

}  // namespace snipsec::classify
