// Prints one PASS/FAIL line per acceptance criterion; exits non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "snipsec/classifier.hpp"
#include "snipsec/clone.hpp"
#include "snipsec/ir.hpp"
#include "snipsec/pipeline.hpp"
#include "snipsec/resolver.hpp"
#include "snipsec/rules.hpp"

namespace {

using namespace snipsec;
namespace st = snipsec::testing;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4)
{
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
}

rules::SecurityVerdict label_fixture(const std::string& code, rules::Context ctx)
{
    if (ctx == rules::Context::Any) {
        ctx = rules::infer_context(code);
    }
    const auto rel = api::is_security_related(code, st::registry());
    return rules::label_code(code, rel.resolved, ctx);
}

// ------------------------------------------------------------ 1

Outcome rule_golden_suite()
{
    const auto t0 = Clock::now();
    const auto fixtures = st::rule_fixtures();
    std::size_t ok = 0;
    std::vector<std::string> bad;
    std::set<std::string> covered;
    for (const auto& fx : fixtures) {
        const auto v = label_fixture(fx.code, fx.context);
        const bool fired = std::find(v.fired_rules.begin(), v.fired_rules.end(), fx.rule_id) != v.fired_rules.end();
        if (v.label == fx.expected && fired) {
            ++ok;
        } else {
            bad.push_back(fx.name);
        }
        covered.insert(fx.rule_id);
    }

    // the two context-dependent rows, each fixture also run under the other context
    const std::map<std::string, std::pair<std::string, rules::Label>> flipped = {
        {"aes_cbc_local", {"cipher-AES-CBC-client-server", rules::Label::Insecure}},
        {"aes_cbc_network", {"cipher-AES-CBC-non-client-server", rules::Label::Secure}},
        {"rsa_pkcs1_local", {"RSA-padding-PKCS1-client-server", rules::Label::Insecure}},
        {"rsa_pkcs1_network", {"RSA-padding-PKCS1-non-client-server", rules::Label::Secure}},
    };
    std::size_t flip_ok = 0;
    for (const auto& fx : fixtures) {
        auto it = flipped.find(fx.name);
        if (it == flipped.end()) {
            continue;
        }
        const auto other = fx.context == rules::Context::ClientServer ? rules::Context::NonClientServer
                                                                      : rules::Context::ClientServer;
        const auto v = label_fixture(fx.code, other);
        const bool fired = std::find(v.fired_rules.begin(), v.fired_rules.end(), it->second.first) != v.fired_rules.end();
        if (fired && v.label == it->second.second) {
            ++flip_ok;
        } else {
            bad.push_back(fx.name + "(other context)");
        }
    }

    std::size_t uncovered = 0;
    for (const auto& r : rules::rule_catalog()) {
        uncovered += covered.count(r.rule_id) == 0 ? 1 : 0;
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = fixtures.size() >= 38 && ok == fixtures.size() && flip_ok == flipped.size() && uncovered == 0 &&
             secs < 5.0;
    o.detail = std::to_string(ok) + "/" + std::to_string(fixtures.size()) + " fixtures, " + std::to_string(flip_ok) +
               "/4 context flips, " + std::to_string(uncovered) + " catalog rows without fixture, " + fmt(secs, 2) +
               " s";
    for (const auto& b : bad) {
        o.detail += " [" + b + "]";
    }
    return o;
}

// ------------------------------------------------------------ 2

Outcome listings_regression()
{
    const std::vector<std::pair<std::string, rules::Category>> expected = {
        {"listing1.java", rules::Category::TLS},
        {"listing2.java", rules::Category::SymmetricCrypto},
        {"listing3.java", rules::Category::SecureRandom},
        {"listing4.java", rules::Category::TLS},
    };
    Outcome o{true, ""};
    for (const auto& [file, cat] : expected) {
        const auto code = st::read_text(st::fixture_dir() / "listings" / file);
        const auto v = label_fixture(code, rules::Context::Any);
        bool insecure_in_cat = false;
        bool stray = false;
        for (const auto& id : v.fired_rules) {
            const auto* r = rules::lookup(id);
            if (r != nullptr && r->severity == rules::Severity::InsecureIndicator) {
                insecure_in_cat = insecure_in_cat || r->category == cat;
                stray = stray || r->category != cat;
            }
        }
        const bool ok = v.label == rules::Label::Insecure && insecure_in_cat && !stray;
        o.pass = o.pass && ok;
        o.detail += file.substr(0, file.size() - 5) + "=" + rules::to_string(v.label) + "/" + rules::to_string(cat) +
                    (ok ? "" : "(wrong)") + " ";
    }

    // listing4.java found in an app through the empty trust-manager path
    const auto sc = ir::compile_snippet(st::read_text(st::fixture_dir() / "listings" / "listing4.java"), st::registry());
    const auto ac = ir::compile(st::read_text(st::fixture_dir() / "listings" / "listing4_app.java"), st::registry());
    bool tm_path = false;
    if (sc.ok && ac.ok) {
        const auto snippet = clone::make_snippet("listing4", sc.methods);
        const auto app = clone::make_app("tm-app", ac.methods, ac.classes);
        const auto m = clone::match_snippet(snippet, app, clone::MatchConfig{});
        tm_path = clone::matchable(snippet) && m && m->empty_trustmanager_case;
    }
    o.pass = o.pass && tm_path;
    o.detail += std::string("empty-TrustManager path ") + (tm_path ? "taken" : "NOT taken");
    return o;
}

// ------------------------------------------------------------ 3

// Set-Jaccard over the multiset expansion {(i, k) : 1 <= k <= x_i}.
double expanded_jaccard(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y)
{
    std::set<std::pair<std::size_t, std::uint32_t>> a;
    std::set<std::pair<std::size_t, std::uint32_t>> b;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::uint32_t k = 1; k <= x[i]; ++k) {
            a.emplace(i, k);
        }
        for (std::uint32_t k = 1; k <= y[i]; ++k) {
            b.emplace(i, k);
        }
    }
    std::size_t inter = 0;
    for (const auto& e : a) {
        inter += b.count(e);
    }
    const std::size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double expanded_containment(const std::multiset<int>& x, const std::multiset<int>& y)
{
    auto expand = [](const std::multiset<int>& m) {
        std::set<std::pair<int, std::size_t>> s;
        std::map<int, std::size_t> seen;
        for (int v : m) {
            s.emplace(v, ++seen[v]);
        }
        return s;
    };
    const auto a = expand(x);
    const auto b = expand(y);
    if (a.empty()) {
        return 1.0;
    }
    std::size_t inter = 0;
    for (const auto& e : a) {
        inter += b.count(e);
    }
    return static_cast<double>(inter) / static_cast<double>(a.size());
}

Outcome jaccard_oracle()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20170424);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<std::uint32_t> count(0, 4);
    std::size_t js_ok = 0;
    std::size_t jc_ok = 0;
    constexpr std::size_t kTrials = 1000;
    for (std::size_t t = 0; t < kTrials; ++t) {
        const auto d = static_cast<std::size_t>(dim(rng));
        std::vector<std::uint32_t> x(d);
        std::vector<std::uint32_t> y(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = count(rng);
            y[i] = count(rng);
        }
        js_ok += clone::jaccard_similarity(x, y) == expanded_jaccard(x, y) ? 1 : 0;

        std::multiset<int> a;
        std::multiset<int> b;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::uint32_t k = 0; k < x[i]; ++k) {
                a.insert(static_cast<int>(i));
            }
            for (std::uint32_t k = 0; k < y[i]; ++k) {
                b.insert(static_cast<int>(i));
            }
        }
        jc_ok += clone::jaccard_containment(a, b) == expanded_containment(a, b) ? 1 : 0;
    }
    const double secs = seconds_since(t0);
    return {js_ok == kTrials && jc_ok == kTrials && secs < 5.0,
            "J_s " + std::to_string(js_ok) + "/1000 exact, J_c " + std::to_string(jc_ok) + "/1000 exact, " +
                fmt(secs, 3) + " s"};
}

// ------------------------------------------------------------ 4

Outcome confusion_arithmetic()
{
    // cells fed as label vectors through confusion()
    std::vector<int> truth;
    std::vector<int> pred;
    auto add = [&](int t, int p, int n) {
        for (int i = 0; i < n; ++i) {
            truth.push_back(t);
            pred.push_back(p);
        }
    };
    add(-1, -1, 181);
    add(-1, 1, 7);
    add(1, -1, 19);
    add(1, 1, 65);
    const auto cm = classify::confusion(truth, pred);
    const bool cells = cm.tn == 181 && cm.fp == 7 && cm.fn == 19 && cm.tp == 65;
    const double acc = cm.accuracy();
    const double prec = cm.precision();
    return {cells && std::abs(acc - 0.904) <= 0.0005 && std::abs(prec - 0.903) <= 0.0005,
            "accuracy " + fmt(acc) + ", precision " + fmt(prec) + ", recall " + fmt(cm.recall())};
}

// ------------------------------------------------------------ 5

Outcome classifier_properties()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(11);

    // (a) hinge subgradient against central differences away from kinks
    classify::TrainingSet ts;
    ts.dim = 6;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 12; ++i) {
        classify::FeatureVector fv;
        for (std::size_t k = 0; k < ts.dim; ++k) {
            if (rng() % 3 != 0) {
                fv.entries.emplace_back(k, gauss(rng));
            }
        }
        ts.x.push_back(fv);
        ts.y.push_back(i % 2 == 0 ? 1 : -1);
    }
    const double C = 0.644;
    double worst = 0.0;
    std::size_t points = 0;
    for (int attempt = 0; attempt < 200 && points < 20; ++attempt) {
        std::vector<double> w(ts.dim);
        for (auto& v : w) {
            v = gauss(rng);
        }
        const double b = gauss(rng) * 0.5;
        bool near_kink = false;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double m = ts.y[i] * (ts.x[i].dot(w) + b);
            near_kink = near_kink || std::abs(1.0 - m) < 1e-3;
        }
        if (near_kink) {
            continue;
        }
        ++points;
        const auto g = classify::subgradient(ts, w, b, C);
        const double h = 1e-6;
        for (std::size_t k = 0; k <= ts.dim; ++k) {
            auto wp = w;
            auto wm = w;
            double bp = b;
            double bm = b;
            if (k < ts.dim) {
                wp[k] += h;
                wm[k] -= h;
            } else {
                bp += h;
                bm -= h;
            }
            const double num = (classify::objective(ts, wp, bp, C) - classify::objective(ts, wm, bm, C)) / (2 * h);
            const double ana = k < ts.dim ? g.w[k] : g.b;
            worst = std::max(worst, std::abs(num - ana));
        }
    }
    const bool grad_ok = points == 20 && worst <= 1e-4;

    // (b) separable toy documents
    std::vector<classify::TokenDocument> toy;
    std::vector<int> toy_y;
    const std::vector<std::string> bad = {"setSeed", "ECB", "MD5", "proceed", "RC4"};
    const std::vector<std::string> good = {"nextBytes", "GCM", "SHA256", "cancel", "OAEP"};
    for (int i = 0; i < 20; ++i) {
        const bool pos = i % 2 == 0;
        const auto& words = pos ? bad : good;
        std::string code = "x.call(" + words[static_cast<std::size_t>(i / 2) % words.size()] + "); y.run(" +
                           words[static_cast<std::size_t>(i / 2 + 1) % words.size()] + ");";
        toy.push_back(classify::tokenize(code, "toy" + std::to_string(i)));
        toy_y.push_back(pos ? 1 : -1);
    }
    const auto vocab = classify::fit_vocabulary(toy);
    const auto toy_ts = classify::make_training_set(toy, toy_y, vocab);
    const auto model = classify::train(toy_ts, vocab, C, 50, 7);
    std::size_t right = 0;
    for (std::size_t i = 0; i < toy_ts.size(); ++i) {
        right += classify::predict(model, toy_ts.x[i]).label == toy_ts.y[i] ? 1 : 0;
    }
    const bool toy_ok = right == toy_ts.size();

    // (c) cross-validation on the bundled labeled corpus; C chosen by grid search
    const auto corpus = st::labeled_corpus();
    std::vector<classify::TokenDocument> docs;
    std::vector<int> y;
    for (const auto& s : corpus) {
        docs.push_back(classify::tokenize(s.code, s.id));
        y.push_back(s.label);
    }
    const auto cfg = pipeline::load_config(st::fixture_dir() / "pipeline.json");
    const auto grid = classify::grid_search_C(docs, y, cfg.classifier.C_grid, 5, cfg.classifier.epochs,
                                              cfg.classifier.seed);
    const auto cv = classify::cross_validate(docs, y, 5, grid.best_C, cfg.classifier.epochs, cfg.classifier.seed);
    double at_default = 0.0;
    for (const auto& [gc, acc] : grid.mean_accuracy) {
        if (gc == 0.644) {
            at_default = acc;
        }
    }
    const bool cv_ok = corpus.size() >= 200 && cv.mean_accuracy >= 0.85;
    const double secs = seconds_since(t0);

    return {grad_ok && toy_ok && cv_ok && secs < 60.0,
            "max |subgradient - finite diff| " + std::to_string(worst) + " over " + std::to_string(points) +
                " points; toy train accuracy " + std::to_string(right) + "/" + std::to_string(toy_ts.size()) +
                " in 50 epochs; 5-fold CV on " + std::to_string(corpus.size()) + " snippets " +
                fmt(cv.mean_accuracy) + " at grid C=" + fmt(grid.best_C, 3) + " (C=0.644: " + fmt(at_default) +
                "); " + fmt(secs, 1) + " s"};
}

// ------------------------------------------------------------ 6

Outcome robustness_suite()
{
    const std::vector<std::string> keep = {"rename", "reorder", "insert"};
    const std::vector<std::string> drop = {"mutate_constant", "remove_security_call", "split"};
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // variant -> (detected, total)
    std::vector<std::string> odd;
    std::vector<st::fs::path> cases;
    for (const auto& e : st::fs::directory_iterator(st::fixture_dir() / "robustness")) {
        if (e.is_directory()) {
            cases.push_back(e.path());
        }
    }
    std::sort(cases.begin(), cases.end());
    for (const auto& dir : cases) {
        const auto sc = ir::compile_snippet(st::read_text(dir / "snippet.java"), st::registry());
        if (!sc.ok) {
            odd.push_back(dir.filename().string() + ":snippet rejected");
            continue;
        }
        const auto snippet = clone::make_snippet(dir.filename().string(), sc.methods);
        auto run = [&](const std::string& variant) {
            const auto ac = ir::compile(st::read_text(dir / (variant + ".java")), st::registry());
            if (!ac.ok) {
                odd.push_back(dir.filename().string() + ":" + variant + " rejected");
                return false;
            }
            const auto app = clone::make_app(variant, ac.methods, ac.classes);
            return clone::match_snippet(snippet, app, clone::MatchConfig{}).has_value();
        };
        for (const auto& v : keep) {
            const bool hit = run(v);
            tally[v].first += hit ? 1 : 0;
            ++tally[v].second;
            if (!hit) {
                odd.push_back(dir.filename().string() + ":" + v + " missed");
            }
        }
        for (const auto& v : drop) {
            const bool hit = run(v);
            tally[v].first += hit ? 1 : 0;
            ++tally[v].second;
            if (hit) {
                odd.push_back(dir.filename().string() + ":" + v + " detected");
            }
        }
    }
    Outcome o{cases.size() == 20, std::to_string(cases.size()) + " fixtures;"};
    auto rate = [&](const std::string& v) {
        const auto& [hit, total] = tally[v];
        return total == 0 ? -1.0 : static_cast<double>(hit) / static_cast<double>(total);
    };
    for (const auto& v : keep) {
        o.pass = o.pass && rate(v) == 1.0;
        o.detail += " recall(" + v + ")=" + fmt(rate(v), 2);
    }
    for (const auto& v : drop) {
        o.pass = o.pass && rate(v) == 0.0;
        o.detail += " detection(" + v + ")=" + fmt(rate(v), 2);
    }
    for (const auto& s : odd) {
        o.detail += " [" + s + "]";
    }
    return o;
}

// ------------------------------------------------------------ 7

Outcome threshold_sensitivity()
{
    const auto dir = st::fixture_dir() / "threshold";
    const auto sc = ir::compile_snippet(st::read_text(dir / "snippet.java"), st::registry());
    const auto vc = ir::compile(st::read_text(dir / "verbatim.java"), st::registry());
    const auto ec = ir::compile(st::read_text(dir / "one_extra_node.java"), st::registry());
    if (!sc.ok || !vc.ok || !ec.ok) {
        return {false, "threshold fixtures did not compile"};
    }
    const auto snippet = clone::make_snippet("threshold", sc.methods);
    const auto verbatim = clone::make_app("verbatim", vc.methods, vc.classes);
    const auto extra = clone::make_app("extra", ec.methods, ec.classes);
    auto at = [&](const clone::CompiledApp& app, double t) {
        clone::MatchConfig cfg;
        cfg.similarity_threshold = t;
        return clone::match_snippet(snippet, app, cfg);
    };

    // block size and the achieved score
    std::size_t block_nodes = 0;
    for (const auto& pm : snippet.methods) {
        for (const auto& b : pm.pdg.semantic_blocks) {
            block_nodes = std::max(block_nodes, b.size());
        }
    }
    double score = -1.0;
    if (auto m = at(extra, 0.90)) {
        for (const auto& [name, scores] : m->scores) {
            for (double s : scores) {
                if (s < 1.0) {
                    score = s;
                }
            }
        }
    }
    const bool v091 = at(verbatim, 0.91).has_value();
    const bool v100 = at(verbatim, 1.0).has_value();
    const bool e090 = at(extra, 0.90).has_value();
    const bool e091 = at(extra, 0.91).has_value();
    const bool pass = v091 && v100 && e090 && !e091 && block_nodes == 10 && std::abs(score - 10.0 / 11.0) < 1e-12;
    auto yn = [](bool b) { return b ? "match" : "no match"; };
    return {pass, std::string("verbatim@0.91 ") + yn(v091) + ", verbatim@1.0 " + yn(v100) + ", extra-node@0.90 " +
                      yn(e090) + ", extra-node@0.91 " + yn(e091) + "; block " + std::to_string(block_nodes) +
                      " nodes, J_s " + fmt(score, 6)};
}

// ------------------------------------------------------------ 8

Outcome end_to_end_determinism()
{
    const auto t0 = Clock::now();
    st::TempDir a("e2e-a");
    st::TempDir b("e2e-b");
    auto ca = st::fixture_config(a.path());
    auto cb = st::fixture_config(b.path());
    cb.jobs = 3;  // scheduling must not leak into the artifacts
    pipeline::Pipeline(ca).run(pipeline::Stage::Ingest, pipeline::Stage::Report);
    pipeline::Pipeline(cb).run(pipeline::Stage::Ingest, pipeline::Stage::Report);
    const double secs = seconds_since(t0);
    const auto sa = st::snapshot(a.path());
    const auto sb = st::snapshot(b.path());
    std::size_t expected_artifacts = 0;
    for (const char* name : {pipeline::artifact::kSnippets, pipeline::artifact::kRelated, pipeline::artifact::kLabels,
                             pipeline::artifact::kModel, pipeline::artifact::kClassified, pipeline::artifact::kSnippetIr,
                             pipeline::artifact::kCorpusIr, pipeline::artifact::kMatches, pipeline::artifact::kSummary,
                             pipeline::artifact::kFeedback, pipeline::artifact::kManifest}) {
        expected_artifacts += st::fs::exists(a.path() / name) ? 1 : 0;
    }
    std::size_t posts = 0;
    for (const auto& line : {st::read_text(st::fixture_dir() / "posts.xml")}) {
        for (std::size_t p = line.find("<row "); p != std::string::npos; p = line.find("<row ", p + 1)) {
            ++posts;
        }
    }
    std::size_t apps = 0;
    for (const auto& e : st::fs::directory_iterator(ca.paths.corpus)) {
        apps += e.is_directory() ? 1 : 0;
    }
    const bool identical = sa == sb && !sa.empty();
    return {identical && expected_artifacts == 11 && posts == 50 && apps == 20 && secs < 60.0,
            std::to_string(posts) + " posts, " + std::to_string(apps) + " apps, " + std::to_string(sa.size()) +
                " artifacts " + (identical ? "byte-identical" : "DIFFER") + " across two runs (jobs 1 vs 3), " +
                fmt(secs, 2) + " s for both"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"rule-table golden suite", rule_golden_suite},
        {"listings regression", listings_regression},
        {"jaccard oracle equivalence", jaccard_oracle},
        {"confusion-matrix arithmetic", confusion_arithmetic},
        {"classifier properties", classifier_properties},
        {"clone-detection robustness", robustness_suite},
        {"threshold sensitivity", threshold_sensitivity},
        {"end-to-end determinism", end_to_end_determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << name << ": " << o.detail << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
