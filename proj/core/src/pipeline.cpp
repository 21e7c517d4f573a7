#include "snipsec/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pool.hpp"
#include "snipsec/classifier.hpp"
#include "snipsec/common.hpp"
#include "snipsec/ingest.hpp"
#include "snipsec/ir.hpp"
#include "snipsec/registry.hpp"
#include "snipsec/report.hpp"
#include "snipsec/resolver.hpp"

namespace snipsec::pipeline {

using nlohmann::json;

namespace {

constexpr int kConfigVersion = 1;
constexpr int kArtifactVersion = 1;
constexpr int kManifestVersion = 1;

const std::vector<std::pair<Stage, std::string>> kStageNames = {
    {Stage::Ingest, "ingest"},   {Stage::Filter, "filter"},   {Stage::Label, "label"},
    {Stage::Train, "train"},     {Stage::Classify, "classify"}, {Stage::Compile, "compile"},
    {Stage::Detect, "detect"},   {Stage::Report, "report"},
};

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw DataError("cannot read " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& data)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError("cannot write " + p.string());
    }
    out << data;
    if (!out) {
        throw DataError("short write on " + p.string());
    }
}

json opt_path(const std::optional<fs::path>& p)
{
    return p ? json(p->string()) : json(nullptr);
}

fs::path resolve(const fs::path& base, const std::string& raw)
{
    fs::path p(raw);
    return p.is_absolute() ? p.lexically_normal() : (base / p).lexically_normal();
}

std::optional<fs::path> resolve_opt(const fs::path& base, const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return resolve(base, j.at(key).get<std::string>());
}

void write_jsonl(const fs::path& file, const json& header, const std::vector<json>& rows)
{
    std::string out = header.dump() + "\n";
    for (const auto& r : rows) {
        out += r.dump();
        out += '\n';
    }
    write_file(file, out);
}

json read_json_file(const fs::path& p)
{
    try {
        return json::parse(read_file(p));
    } catch (const json::parse_error& e) {
        throw DataError(p.string() + ": " + e.what());
    }
}

json read_header(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::string line;
    if (!in || !std::getline(in, line)) {
        throw DataError(p.string() + ": empty artifact");
    }
    try {
        return json::parse(line);
    } catch (const json::parse_error& e) {
        throw DataError(p.string() + ":1: " + e.what());
    }
}

// ------------------------------------------------------------ stage wiring

struct Input {
    std::string key;                 // artifact file name or "ext:<what>"
    std::optional<Stage> producer;   // set for upstream artifacts
    fs::path path;
};

fs::path out_path(const PipelineConfig& c, const std::string& name)
{
    if (name == artifact::kModel) {
        return c.model_path();
    }
    return c.paths.output / name;
}

Input upstream(const PipelineConfig& c, const char* name, Stage producer)
{
    return Input{name, producer, out_path(c, name)};
}

std::vector<Input> inputs_of(Stage s, const PipelineConfig& c)
{
    std::vector<Input> in;
    auto ext = [&](const std::string& what, const std::optional<fs::path>& p) {
        if (p) {
            in.push_back(Input{"ext:" + what, std::nullopt, *p});
        }
    };
    switch (s) {
    case Stage::Ingest: ext("dump", c.paths.dump); break;
    case Stage::Filter:
        in.push_back(upstream(c, artifact::kSnippets, Stage::Ingest));
        ext("registry", c.paths.registry);
        break;
    case Stage::Label:
        in.push_back(upstream(c, artifact::kRelated, Stage::Filter));
        ext("rule_catalog", c.paths.rule_catalog);
        break;
    case Stage::Train:
        in.push_back(upstream(c, artifact::kLabels, Stage::Label));
        ext("training_corpus", c.paths.training_corpus);
        break;
    case Stage::Classify:
        in.push_back(upstream(c, artifact::kLabels, Stage::Label));
        in.push_back(upstream(c, artifact::kModel, Stage::Train));
        break;
    case Stage::Compile:
        in.push_back(upstream(c, artifact::kLabels, Stage::Label));
        ext("registry", c.paths.registry);
        ext("corpus", c.paths.corpus);
        break;
    case Stage::Detect:
        in.push_back(upstream(c, artifact::kSnippetIr, Stage::Compile));
        in.push_back(upstream(c, artifact::kCorpusIr, Stage::Compile));
        break;
    case Stage::Report:
        in.push_back(upstream(c, artifact::kMatches, Stage::Detect));
        in.push_back(upstream(c, artifact::kClassified, Stage::Classify));
        ext("comments", c.paths.comments);
        break;
    }
    return in;
}

std::vector<std::string> outputs_of(Stage s)
{
    switch (s) {
    case Stage::Ingest: return {artifact::kSnippets};
    case Stage::Filter: return {artifact::kRelated};
    case Stage::Label: return {artifact::kLabels};
    case Stage::Train: return {artifact::kModel, artifact::kTraining};
    case Stage::Classify: return {artifact::kClassified};
    case Stage::Compile: return {artifact::kSnippetIr, artifact::kCorpusIr};
    case Stage::Detect: return {artifact::kMatches};
    case Stage::Report:
        return {artifact::kSummary, artifact::kFeedback, artifact::kCategoriesCsv, artifact::kFeedbackCsv};
    }
    return {};
}

json params_of(Stage s, const PipelineConfig& c)
{
    switch (s) {
    case Stage::Ingest: return {{"tag_filter", c.tag_filter}};
    case Stage::Label: return {{"context", rules::to_string(c.context)}};
    case Stage::Train:
        return {{"C", c.classifier.C},
                {"epochs", c.classifier.epochs},
                {"seed", c.classifier.seed},
                {"folds", c.classifier.folds},
                {"C_grid", c.classifier.C_grid}};
    case Stage::Detect:
        return {{"similarity_threshold", c.match.similarity_threshold},
                {"containment_threshold", c.match.containment_threshold},
                {"candidate_class_filter", c.match.candidate_class_filter}};
    case Stage::Report: return {{"warning_lexicon", c.warning_lexicon}};
    default: return json::object();
    }
}

// ------------------------------------------------------------ manifest

class Manifest {
public:
    explicit Manifest(fs::path file) : file_(std::move(file))
    {
        if (fs::exists(file_)) {
            data_ = read_json_file(file_);
            if (data_.value("format_version", 0) != kManifestVersion || !data_.contains("stages")) {
                throw DataError(file_.string() + ": unsupported manifest");
            }
        } else {
            data_ = {{"format_version", kManifestVersion}, {"stages", json::object()}};
        }
    }

    const json* entry(Stage s) const
    {
        const auto& stages = data_.at("stages");
        auto it = stages.find(to_string(s));
        return it == stages.end() ? nullptr : &*it;
    }

    void record(Stage s, json e)
    {
        data_["stages"][to_string(s)] = std::move(e);
        write_file(file_, data_.dump(2) + "\n");
    }

private:
    fs::path file_;
    json data_;
};

std::string hex_hash(const fs::path& p)
{
    return to_hex(hash_path(p));
}

json current_inputs(Stage s, const PipelineConfig& c)
{
    json in = json::object();
    for (const auto& i : inputs_of(s, c)) {
        in[i.key] = fs::exists(i.path) ? json(hex_hash(i.path)) : json(nullptr);
    }
    return in;
}

std::string params_hash(Stage s, const PipelineConfig& c)
{
    return to_hex(fnv1a64(params_of(s, c).dump()));
}

// Refuses to run `s` unless every upstream artifact exists, still has the
// bytes its producer recorded, and its producer's own inputs are unchanged.
// Walks the producer chain, earliest stage first, so the error names the
// first stage that has to run again.
void check_upstream(Stage s, const PipelineConfig& c, const Manifest& m, std::set<Stage>& checked)
{
    for (const auto& i : inputs_of(s, c)) {
        if (!i.producer) {
            continue;
        }
        if (checked.insert(*i.producer).second) {
            check_upstream(*i.producer, c, m, checked);
        }
        const std::string producer = to_string(*i.producer);
        const json* e = m.entry(*i.producer);
        if (!fs::exists(i.path) || e == nullptr) {
            throw UpstreamError(i.key + " is missing; run stage '" + producer + "' first");
        }
        const auto& outs = e->at("outputs");
        if (!outs.contains(i.key) || outs.at(i.key).get<std::string>() != hex_hash(i.path)) {
            throw UpstreamError(i.key + " differs from what stage '" + producer + "' recorded; re-run stage '" +
                                producer + "'");
        }
        if (e->at("inputs") != current_inputs(*i.producer, c) ||
            e->at("params").get<std::string>() != params_hash(*i.producer, c)) {
            throw UpstreamError("stage '" + producer + "' is stale (its inputs or parameters changed); re-run stage '" +
                                producer + "'");
        }
    }
}

bool up_to_date(Stage s, const PipelineConfig& c, const Manifest& m)
{
    const json* e = m.entry(s);
    if (e == nullptr || e->at("inputs") != current_inputs(s, c) ||
        e->at("params").get<std::string>() != params_hash(s, c)) {
        return false;
    }
    for (const auto& name : outputs_of(s)) {
        const auto p = out_path(c, name);
        const auto& outs = e->at("outputs");
        if (!fs::exists(p) || !outs.contains(name) || outs.at(name).get<std::string>() != hex_hash(p)) {
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ stages

std::set<api::ResolvedElement> resolved_of(const json& row)
{
    std::set<api::ResolvedElement> out;
    for (const auto& e : row.at("resolved")) {
        out.insert(api::resolved_from_json(e));
    }
    return out;
}

std::string run_ingest(const PipelineConfig& c)
{
    std::ifstream in(c.paths.dump, std::ios::binary);
    if (!in) {
        throw DataError("cannot read " + c.paths.dump.string());
    }
    ingest::Diagnostics diag;
    std::vector<ingest::PostRecord> posts;
    try {
        posts = ingest::parse_dump(in, c.tag_filter, &diag);
    } catch (const ingest::XmlError& e) {
        throw DataError(c.paths.dump.string() + ": " + e.what() + " at byte " + std::to_string(e.offset()));
    }
    std::vector<ingest::SnippetRecord> all;
    for (const auto& p : posts) {
        auto s = ingest::extract_snippets(p, &diag);
        all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    }
    const auto kept = ingest::dedupe(all);
    std::vector<json> rows;
    rows.reserve(kept.size());
    for (const auto& s : kept) {
        rows.push_back(ingest::to_json(s));
    }
    auto header = artifact_header(artifact::kSnippets, Stage::Ingest, rows.size());
    header["posts"] = posts.size();
    header["snippets_before_dedupe"] = all.size();
    header["diagnostics"] = {{"rows_seen", diag.rows_seen},
                             {"rows_missing_attributes", diag.rows_missing_attributes},
                             {"rows_other_type", diag.rows_other_type},
                             {"answers_without_matched_parent", diag.answers_without_matched_parent},
                             {"unbalanced_code_blocks", diag.unbalanced_code_blocks},
                             {"short_inline_spans_dropped", diag.short_inline_spans_dropped},
                             {"empty_blocks_dropped", diag.empty_blocks_dropped}};
    write_jsonl(c.paths.output / artifact::kSnippets, header, rows);
    return std::to_string(posts.size()) + " posts, " + std::to_string(rows.size()) + " snippets";
}

std::string run_filter(const PipelineConfig& c)
{
    const auto snippets = read_jsonl(c.paths.output / artifact::kSnippets, artifact::kSnippets);
    const auto registry = api::load_registry(c.paths.registry);
    auto rows = detail::parallel_map<json>(snippets.size(), c.jobs, [&](std::size_t i) {
        const auto s = ingest::snippet_from_json(snippets[i]);
        const auto rel = api::is_security_related(s.code_text, registry);
        json resolved = json::array();
        for (const auto& e : rel.resolved) {
            resolved.push_back(api::to_json(e));
        }
        json row = ingest::to_json(s);
        row["related"] = rel.related;
        row["resolved"] = resolved;
        return row;
    });
    const auto related = std::count_if(rows.begin(), rows.end(), [](const json& r) { return r.at("related").get<bool>(); });
    write_jsonl(c.paths.output / artifact::kRelated, artifact_header(artifact::kRelated, Stage::Filter, rows.size()),
                rows);
    return std::to_string(related) + " of " + std::to_string(rows.size()) + " snippets security-related";
}

std::string run_label(const PipelineConfig& c)
{
    const auto related = read_jsonl(c.paths.output / artifact::kRelated, artifact::kRelated);
    std::optional<std::set<std::string>> allowed;
    if (c.paths.rule_catalog) {
        const auto cat = read_json_file(*c.paths.rule_catalog);
        allowed.emplace();
        try {
            for (const auto& r : cat.at("rules")) {
                const auto id = r.at("rule_id").get<std::string>();
                if (rules::lookup(id) == nullptr) {
                    throw ConfigError("rule catalog names unknown rule " + id);
                }
                allowed->insert(id);
            }
        } catch (const json::exception& e) {
            throw ConfigError(c.paths.rule_catalog->string() + ": " + e.what());
        }
    }
    std::vector<const json*> todo;
    for (const auto& r : related) {
        if (r.at("related").get<bool>()) {
            todo.push_back(&r);
        }
    }
    auto rows = detail::parallel_map<json>(todo.size(), c.jobs, [&](std::size_t i) {
        const json& src = *todo[i];
        const auto s = ingest::snippet_from_json(src);
        const auto resolved = resolved_of(src);
        const auto ctx = c.context == rules::Context::Any ? rules::infer_context(s.code_text) : c.context;
        auto fired = rules::fired_rules(s.code_text, resolved, ctx);
        if (allowed) {
            fired.erase(std::remove_if(fired.begin(), fired.end(),
                                       [&](const std::string& id) { return allowed->count(id) == 0; }),
                        fired.end());
        }
        const auto verdict = rules::verdict_from_fired(fired);
        json row = src;
        row.erase("related");
        row["context"] = rules::to_string(ctx);
        row.update(rules::to_json(verdict));
        row["report_categories"] = report::report_categories(verdict.fired_rules, resolved);
        return row;
    });
    const auto insecure = std::count_if(rows.begin(), rows.end(),
                                        [](const json& r) { return r.at("label").get<std::string>() == "insecure"; });
    write_jsonl(c.paths.output / artifact::kLabels, artifact_header(artifact::kLabels, Stage::Label, rows.size()),
                rows);
    return std::to_string(rows.size()) + " labeled, " + std::to_string(insecure) + " insecure";
}

std::string run_train(const PipelineConfig& c)
{
    const auto labels = read_jsonl(c.paths.output / artifact::kLabels, artifact::kLabels);
    std::vector<classify::TokenDocument> docs;
    std::vector<int> y;
    std::size_t from_answers = 0;
    for (const auto& r : labels) {
        // answers carry the reviewed (rule) labels; questions are what the
        // model is for
        if (r.at("kind").get<std::string>() != "answer") {
            continue;
        }
        docs.push_back(classify::tokenize(r.at("code_text").get<std::string>(), r.at("snippet_id").get<std::string>()));
        y.push_back(r.at("label").get<std::string>() == "insecure" ? 1 : -1);
        ++from_answers;
    }
    std::size_t from_corpus = 0;
    if (c.paths.training_corpus) {
        std::ifstream in(*c.paths.training_corpus);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (trim(line).empty()) {
                continue;
            }
            try {
                const auto j = json::parse(line);
                if (j.contains("artifact")) {
                    continue;
                }
                docs.push_back(classify::tokenize(j.at("code_text").get<std::string>(), j.at("snippet_id").get<std::string>()));
                y.push_back(rules::label_from_string(j.at("label").get<std::string>()) == rules::Label::Insecure ? 1 : -1);
                ++from_corpus;
            } catch (const json::exception& e) {
                throw DataError(c.paths.training_corpus->string() + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    const auto pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    const std::size_t neg = y.size() - pos;
    if (pos == 0 || neg == 0) {
        throw DataError("training data needs both secure and insecure snippets (have " + std::to_string(pos) +
                        " insecure, " + std::to_string(neg) + " secure)");
    }
    const bool cv_feasible = std::min(pos, neg) >= c.classifier.folds;
    double C = c.classifier.C;
    json grid = nullptr;
    if (!c.classifier.C_grid.empty()) {
        if (!cv_feasible) {
            throw DataError("C grid search needs at least " + std::to_string(c.classifier.folds) +
                            " snippets of each label");
        }
        const auto g = classify::grid_search_C(docs, y, c.classifier.C_grid, c.classifier.folds,
                                               c.classifier.epochs, c.classifier.seed);
        C = g.best_C;
        grid = json::array();
        for (const auto& [gc, acc] : g.mean_accuracy) {
            grid.push_back({{"C", gc}, {"mean_accuracy", acc}});
        }
    }
    const auto vocab = classify::fit_vocabulary(docs);
    const auto ts = classify::make_training_set(docs, y, vocab);
    const auto model = classify::train(ts, vocab, C, c.classifier.epochs, c.classifier.seed);
    write_file(c.model_path(), classify::to_json(model).dump(2) + "\n");

    json info = {{"artifact", artifact::kTraining},
                 {"format_version", kArtifactVersion},
                 {"stage", to_string(Stage::Train)},
                 {"samples", y.size()},
                 {"insecure", pos},
                 {"secure", neg},
                 {"from_answers", from_answers},
                 {"from_training_corpus", from_corpus},
                 {"vocabulary", vocab.size()},
                 {"C", C},
                 {"grid", grid},
                 {"objective", model.final_objective}};
    if (cv_feasible) {
        const auto cv = classify::cross_validate(docs, y, c.classifier.folds, C, c.classifier.epochs,
                                                 c.classifier.seed);
        json folds = json::array();
        for (const auto& f : cv.folds) {
            folds.push_back({{"tp", f.tp}, {"fp", f.fp}, {"tn", f.tn}, {"fn", f.fn}});
        }
        info["cv"] = {{"folds", folds},
                      {"mean_accuracy", cv.mean_accuracy},
                      {"mean_precision", cv.mean_precision},
                      {"mean_recall", cv.mean_recall}};
    } else {
        info["cv"] = nullptr;
    }
    write_file(c.paths.output / artifact::kTraining, info.dump(2) + "\n");
    return std::to_string(y.size()) + " training snippets, vocabulary " + std::to_string(vocab.size()) + ", C " +
           json(C).dump();
}

std::string run_classify(const PipelineConfig& c)
{
    const auto labels = read_jsonl(c.paths.output / artifact::kLabels, artifact::kLabels);
    const auto model = classify::model_from_json(read_json_file(c.model_path()));
    auto rows = detail::parallel_map<json>(labels.size(), c.jobs, [&](std::size_t i) {
        const json& r = labels[i];
        const auto p = classify::predict_code(model, r.at("code_text").get<std::string>());
        const std::string predicted = p.label > 0 ? "insecure" : "secure";
        const std::string rule_label = r.at("label").get<std::string>();
        const bool answer = r.at("kind").get<std::string>() == "answer";
        return json{{"snippet_id", r.at("snippet_id")},
                    {"post_id", r.at("post_id")},
                    {"kind", r.at("kind")},
                    {"score", r.at("score")},
                    {"view_count", r.at("view_count")},
                    {"rule_label", rule_label},
                    {"predicted_label", predicted},
                    {"margin", p.margin},
                    {"final_label", answer ? rule_label : predicted},
                    {"report_categories", r.at("report_categories")}};
    });
    const auto insecure = std::count_if(rows.begin(), rows.end(), [](const json& r) {
        return r.at("final_label").get<std::string>() == "insecure";
    });
    write_jsonl(c.paths.output / artifact::kClassified,
                artifact_header(artifact::kClassified, Stage::Classify, rows.size()), rows);
    return std::to_string(rows.size()) + " classified, " + std::to_string(insecure) + " insecure";
}

json compile_json(const ir::CompileResult& r)
{
    json methods = json::array();
    for (const auto& m : r.methods) {
        methods.push_back(ir::to_json(m, ir::build_pdg(m)));
    }
    json classes = json::array();
    for (const auto& k : r.classes) {
        classes.push_back(ir::to_json(k));
    }
    return {{"methods", methods}, {"classes", classes}};
}

std::vector<fs::path> java_files(const fs::path& dir)
{
    std::vector<fs::path> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".java") {
            out.push_back(e.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string run_compile(const PipelineConfig& c)
{
    const auto labels = read_jsonl(c.paths.output / artifact::kLabels, artifact::kLabels);
    const auto registry = api::load_registry(c.paths.registry);

    auto snippet_rows = detail::parallel_map<json>(labels.size(), c.jobs, [&](std::size_t i) {
        const auto r = ir::compile_snippet(labels[i].at("code_text").get<std::string>(), registry);
        json row = {{"snippet_id", labels[i].at("snippet_id")}, {"ok", r.ok}, {"rejection", r.rejection}};
        row.update(compile_json(r));
        return row;
    });
    const auto ok = std::count_if(snippet_rows.begin(), snippet_rows.end(),
                                  [](const json& r) { return r.at("ok").get<bool>(); });

    std::vector<fs::path> apps;
    for (const auto& e : fs::directory_iterator(c.paths.corpus)) {
        if (e.is_directory()) {
            apps.push_back(e.path());
        }
    }
    std::sort(apps.begin(), apps.end());
    auto app_rows = detail::parallel_map<json>(apps.size(), c.jobs, [&](std::size_t i) {
        json methods = json::array();
        json classes = json::array();
        json rejected = json::array();
        const auto files = java_files(apps[i]);
        for (const auto& f : files) {
            const auto r = ir::compile(read_file(f), registry);
            const auto rel = fs::relative(f, apps[i]).generic_string();
            if (!r.ok) {
                rejected.push_back({{"file", rel}, {"reason", r.rejection}});
                continue;
            }
            auto part = compile_json(r);
            for (auto& m : part.at("methods")) {
                methods.push_back(std::move(m));
            }
            for (auto& k : part.at("classes")) {
                classes.push_back(std::move(k));
            }
        }
        return json{{"app_id", apps[i].filename().string()},
                    {"files", files.size()},
                    {"rejected", rejected},
                    {"methods", methods},
                    {"classes", classes}};
    });

    write_jsonl(c.paths.output / artifact::kSnippetIr,
                artifact_header(artifact::kSnippetIr, Stage::Compile, snippet_rows.size()), snippet_rows);
    write_jsonl(c.paths.output / artifact::kCorpusIr, artifact_header(artifact::kCorpusIr, Stage::Compile, app_rows.size()),
                app_rows);
    return std::to_string(ok) + " of " + std::to_string(snippet_rows.size()) + " snippets compiled, " +
           std::to_string(app_rows.size()) + " apps";
}

std::vector<ir::IrMethod> methods_of(const json& row)
{
    std::vector<ir::IrMethod> out;
    for (const auto& m : row.at("methods")) {
        out.push_back(ir::method_from_json(m));
    }
    return out;
}

std::string run_detect(const PipelineConfig& c)
{
    const auto srows = read_jsonl(c.paths.output / artifact::kSnippetIr, artifact::kSnippetIr);
    const auto arows = read_jsonl(c.paths.output / artifact::kCorpusIr, artifact::kCorpusIr);

    std::vector<clone::CompiledSnippet> snippets;
    for (const auto& r : srows) {
        if (!r.at("ok").get<bool>()) {
            continue;
        }
        auto s = clone::make_snippet(r.at("snippet_id").get<std::string>(), methods_of(r));
        if (clone::matchable(s)) {
            snippets.push_back(std::move(s));
        }
    }
    auto per_app = detail::parallel_map<std::vector<clone::CloneMatch>>(arows.size(), c.jobs, [&](std::size_t i) {
        std::vector<ir::IrClass> classes;
        for (const auto& k : arows[i].at("classes")) {
            classes.push_back(ir::class_from_json(k));
        }
        const auto app = clone::make_app(arows[i].at("app_id").get<std::string>(), methods_of(arows[i]), classes);
        std::vector<clone::CloneMatch> found;
        for (const auto& s : snippets) {
            if (auto m = clone::match_snippet(s, app, c.match)) {
                found.push_back(std::move(*m));
            }
        }
        return found;
    });
    std::vector<clone::CloneMatch> all;
    for (auto& v : per_app) {
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::tie(a.snippet_id, a.app_id) < std::tie(b.snippet_id, b.app_id);
    });
    std::vector<json> rows;
    std::set<std::string> apps_hit;
    for (const auto& m : all) {
        rows.push_back(clone::to_json(m));
        apps_hit.insert(m.app_id);
    }
    auto header = artifact_header(artifact::kMatches, Stage::Detect, rows.size());
    header["corpus_apps"] = arows.size();
    header["snippets_searched"] = snippets.size();
    header["similarity_threshold"] = c.match.similarity_threshold;
    write_jsonl(c.paths.output / artifact::kMatches, header, rows);
    return std::to_string(rows.size()) + " matches in " + std::to_string(apps_hit.size()) + " of " +
           std::to_string(arows.size()) + " apps";
}

std::string run_report(const PipelineConfig& c)
{
    const auto match_rows = read_jsonl(c.paths.output / artifact::kMatches, artifact::kMatches);
    const auto corpus_apps = read_header(c.paths.output / artifact::kMatches).at("corpus_apps").get<std::size_t>();
    const auto classified = read_jsonl(c.paths.output / artifact::kClassified, artifact::kClassified);

    std::map<std::string, std::vector<std::string>> comments;
    if (c.paths.comments) {
        const auto j = read_json_file(*c.paths.comments);
        try {
            for (const auto& [post, texts] : j.items()) {
                comments[post] = texts.get<std::vector<std::string>>();
            }
        } catch (const json::exception& e) {
            throw DataError(c.paths.comments->string() + ": " + e.what());
        }
    }

    std::vector<clone::CloneMatch> matches;
    std::map<std::string, std::size_t> detections;
    for (const auto& r : match_rows) {
        matches.push_back(clone::match_from_json(r));
        ++detections[matches.back().snippet_id];
    }
    std::vector<report::SnippetInfo> infos;
    std::vector<report::FeedbackRecord> records;
    for (const auto& r : classified) {
        report::SnippetInfo s;
        s.snippet_id = r.at("snippet_id").get<std::string>();
        s.kind = ingest::post_kind_from_string(r.at("kind").get<std::string>());
        s.label = rules::label_from_string(r.at("final_label").get<std::string>());
        for (const auto& cat : r.at("report_categories")) {
            s.categories.insert(cat.get<std::string>());
        }
        report::FeedbackRecord f;
        f.snippet_id = s.snippet_id;
        f.kind = s.kind;
        f.insecure = s.label == rules::Label::Insecure;
        f.score = r.at("score").get<std::int64_t>();
        f.view_count = r.at("view_count").get<std::int64_t>();
        auto it = comments.find(std::to_string(r.at("post_id").get<std::int64_t>()));
        f.has_warning_comment = it != comments.end() && report::has_warning(it->second, c.warning_lexicon);
        f.detection_count = detections.count(s.snippet_id) != 0 ? detections.at(s.snippet_id) : 0;
        infos.push_back(std::move(s));
        records.push_back(f);
    }

    const auto summary = report::summarize(matches, infos, corpus_apps);

    // copy-count tiers cover the insecure snippets that were actually found
    std::vector<report::FeedbackRecord> detected_insecure;
    for (const auto& f : records) {
        if (f.insecure && f.detection_count > 0) {
            detected_insecure.push_back(f);
        }
    }
    report::FeedbackTable table;
    if (detected_insecure.size() >= 4) {
        table = report::feedback_correlation(detected_insecure);
    }
    table.community = report::community_means(records);

    json summary_json = report::to_json(summary);
    summary_json = {{"artifact", artifact::kSummary},
                    {"format_version", kArtifactVersion},
                    {"stage", to_string(Stage::Report)},
                    {"summary", summary_json}};
    json feedback_json = {{"artifact", artifact::kFeedback},
                          {"format_version", kArtifactVersion},
                          {"stage", to_string(Stage::Report)},
                          {"tier_population", detected_insecure.size()},
                          {"feedback", report::to_json(table)}};
    write_file(c.paths.output / artifact::kSummary, summary_json.dump(2) + "\n");
    write_file(c.paths.output / artifact::kFeedback, feedback_json.dump(2) + "\n");
    write_file(c.paths.output / artifact::kCategoriesCsv, report::categories_csv(summary));
    write_file(c.paths.output / artifact::kFeedbackCsv, report::feedback_csv(table));
    return std::to_string(summary.apps_with_clone) + " of " + std::to_string(corpus_apps) + " apps contain a snippet, " +
           std::to_string(summary.apps_with_insecure) + " an insecure one";
}

}  // namespace

// ------------------------------------------------------------ config

bool PipelineConfig::operator==(const PipelineConfig& o) const
{
    return paths == o.paths && tag_filter == o.tag_filter &&
           match.similarity_threshold == o.match.similarity_threshold &&
           match.containment_threshold == o.match.containment_threshold &&
           match.candidate_class_filter == o.match.candidate_class_filter && classifier == o.classifier &&
           context == o.context && warning_lexicon == o.warning_lexicon && jobs == o.jobs;
}

fs::path PipelineConfig::model_path() const
{
    return paths.model ? *paths.model : paths.output / artifact::kModel;
}

void PipelineConfig::validate() const
{
    auto need = [](const fs::path& p, const char* what, bool dir) {
        if (p.empty()) {
            throw ConfigError(std::string("paths.") + what + " is not set");
        }
        if (dir ? !fs::is_directory(p) : !fs::is_regular_file(p)) {
            throw ConfigError(std::string("paths.") + what + " does not exist: " + p.string());
        }
    };
    need(paths.dump, "dump", false);
    need(paths.registry, "registry", false);
    need(paths.corpus, "corpus", true);
    if (paths.rule_catalog) {
        need(*paths.rule_catalog, "rule_catalog", false);
    }
    if (paths.comments) {
        need(*paths.comments, "comments", false);
    }
    if (paths.training_corpus) {
        need(*paths.training_corpus, "training_corpus", false);
    }
    if (paths.output.empty()) {
        throw ConfigError("paths.output is not set");
    }
    if (fs::exists(paths.output) && !fs::is_directory(paths.output)) {
        throw ConfigError("paths.output is not a directory: " + paths.output.string());
    }
    if (!(classifier.C > 0.0)) {
        throw ConfigError("classifier.C must be positive");
    }
    if (classifier.epochs < 1) {
        throw ConfigError("classifier.epochs must be at least 1");
    }
    for (double g : classifier.C_grid) {
        if (!(g > 0.0)) {
            throw ConfigError("classifier.C_grid values must be positive");
        }
    }
    if (classifier.folds < 2) {
        throw ConfigError("classifier.folds must be at least 2");
    }
    if (jobs < 1) {
        throw ConfigError("jobs must be at least 1");
    }
    match.validate();
}

PipelineConfig default_config()
{
    PipelineConfig c;
    c.warning_lexicon = report::kDefaultWarningLexicon;
    return c;
}

PipelineConfig config_from_json(const json& j, const fs::path& base_dir)
{
    static const std::set<std::string> known = {"format_version", "paths",   "tag_filter",      "match",
                                                "classifier",     "context", "warning_lexicon", "jobs"};
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto& [k, v] : j.items()) {
        if (known.count(k) == 0) {
            throw ConfigError("unknown config key '" + k + "'");
        }
    }
    if (j.value("format_version", kConfigVersion) != kConfigVersion) {
        throw ConfigError("unsupported config format_version");
    }
    PipelineConfig c = default_config();
    try {
        const auto& p = j.at("paths");
        auto req = [&](const char* key) {
            if (!p.contains(key) || p.at(key).is_null()) {
                throw ConfigError(std::string("paths.") + key + " is required");
            }
            return resolve(base_dir, p.at(key).get<std::string>());
        };
        c.paths.dump = req("dump");
        c.paths.registry = req("registry");
        c.paths.corpus = req("corpus");
        c.paths.output = req("output");
        c.paths.rule_catalog = resolve_opt(base_dir, p, "rule_catalog");
        c.paths.model = resolve_opt(base_dir, p, "model");
        c.paths.comments = resolve_opt(base_dir, p, "comments");
        c.paths.training_corpus = resolve_opt(base_dir, p, "training_corpus");
        if (j.contains("tag_filter")) {
            c.tag_filter = j.at("tag_filter").get<std::set<std::string>>();
        }
        if (j.contains("match")) {
            const auto& m = j.at("match");
            c.match.similarity_threshold = m.value("similarity_threshold", c.match.similarity_threshold);
            c.match.containment_threshold = m.value("containment_threshold", c.match.containment_threshold);
            c.match.candidate_class_filter = m.value("candidate_class_filter", c.match.candidate_class_filter);
        }
        if (j.contains("classifier")) {
            const auto& k = j.at("classifier");
            c.classifier.C = k.value("C", c.classifier.C);
            c.classifier.epochs = k.value("epochs", c.classifier.epochs);
            c.classifier.seed = k.value("seed", c.classifier.seed);
            c.classifier.folds = k.value("folds", c.classifier.folds);
            c.classifier.C_grid = k.value("C_grid", c.classifier.C_grid);
        }
        if (j.contains("context")) {
            c.context = rules::context_from_string(j.at("context").get<std::string>());
        }
        if (j.contains("warning_lexicon")) {
            c.warning_lexicon = j.at("warning_lexicon").get<std::vector<std::string>>();
        }
        c.jobs = j.value("jobs", c.jobs);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    } catch (const DataError& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return c;
}

json to_json(const PipelineConfig& c)
{
    return {{"format_version", kConfigVersion},
            {"paths",
             {{"dump", c.paths.dump.string()},
              {"registry", c.paths.registry.string()},
              {"rule_catalog", opt_path(c.paths.rule_catalog)},
              {"model", opt_path(c.paths.model)},
              {"corpus", c.paths.corpus.string()},
              {"output", c.paths.output.string()},
              {"comments", opt_path(c.paths.comments)},
              {"training_corpus", opt_path(c.paths.training_corpus)}}},
            {"tag_filter", c.tag_filter},
            {"match",
             {{"similarity_threshold", c.match.similarity_threshold},
              {"containment_threshold", c.match.containment_threshold},
              {"candidate_class_filter", c.match.candidate_class_filter}}},
            {"classifier",
             {{"C", c.classifier.C},
              {"epochs", c.classifier.epochs},
              {"seed", c.classifier.seed},
              {"folds", c.classifier.folds},
              {"C_grid", c.classifier.C_grid}}},
            {"context", rules::to_string(c.context)},
            {"warning_lexicon", c.warning_lexicon},
            {"jobs", c.jobs}};
}

PipelineConfig load_config(const fs::path& file)
{
    if (!fs::is_regular_file(file)) {
        throw ConfigError("config file not found: " + file.string());
    }
    json j;
    try {
        j = json::parse(read_file(file));
    } catch (const json::parse_error& e) {
        throw ConfigError(file.string() + ": " + e.what());
    }
    return config_from_json(j, fs::absolute(file).parent_path());
}

// ------------------------------------------------------------ stages

const std::vector<Stage>& all_stages()
{
    static const std::vector<Stage> stages = [] {
        std::vector<Stage> v;
        for (const auto& [s, n] : kStageNames) {
            v.push_back(s);
        }
        return v;
    }();
    return stages;
}

std::string to_string(Stage s)
{
    for (const auto& [e, n] : kStageNames) {
        if (e == s) {
            return n;
        }
    }
    return "?";
}

Stage stage_from_string(const std::string& s)
{
    for (const auto& [e, n] : kStageNames) {
        if (n == s) {
            return e;
        }
    }
    throw ConfigError("unknown stage '" + s + "'");
}

std::uint64_t hash_path(const fs::path& p)
{
    if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::recursive_directory_iterator(p)) {
            if (e.is_regular_file()) {
                files.push_back(e.path());
            }
        }
        std::sort(files.begin(), files.end());
        std::uint64_t h = fnv1a64("");
        for (const auto& f : files) {
            const auto rel = fs::relative(f, p).generic_string();
            h = fnv1a64(rel, h);
            h = fnv1a64(std::string_view("\0", 1), h);
            h = fnv1a64(read_file(f), h);
            h = fnv1a64(std::string_view("\0", 1), h);
        }
        return h;
    }
    return fnv1a64(read_file(p));
}

json artifact_header(const std::string& name, Stage stage, std::size_t records)
{
    return {{"artifact", name}, {"format_version", kArtifactVersion}, {"stage", to_string(stage)}, {"records", records}};
}

std::vector<json> read_jsonl(const fs::path& file, const std::string& expected_name)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw UpstreamError(file.filename().string() + " is missing");
    }
    std::vector<json> rows;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw DataError(file.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!header) {
            if (j.value("artifact", std::string{}) != expected_name || j.value("format_version", 0) != kArtifactVersion) {
                throw DataError(file.string() + ": expected a '" + expected_name + "' artifact header");
            }
            expected = j.value("records", std::size_t{0});
            header = true;
            continue;
        }
        rows.push_back(std::move(j));
    }
    if (!header) {
        throw DataError(file.string() + ": empty artifact");
    }
    if (rows.size() != expected) {
        throw DataError(file.string() + ": header promises " + std::to_string(expected) + " records, found " +
                        std::to_string(rows.size()));
    }
    return rows;
}

// ------------------------------------------------------------ orchestration

Pipeline::Pipeline(PipelineConfig cfg) : cfg_(std::move(cfg))
{
    cfg_.validate();
    std::error_code ec;
    fs::create_directories(cfg_.paths.output, ec);
    if (ec) {
        throw ConfigError("cannot create output directory " + cfg_.paths.output.string() + ": " + ec.message());
    }
    if (cfg_.paths.model && !cfg_.paths.model->parent_path().empty()) {
        fs::create_directories(cfg_.paths.model->parent_path(), ec);
    }
}

StageResult Pipeline::run_stage(Stage s, bool force)
{
    Manifest manifest(cfg_.paths.output / artifact::kManifest);
    std::set<Stage> checked;
    check_upstream(s, cfg_, manifest, checked);
    StageResult res;
    res.stage = s;
    res.outputs = outputs_of(s);
    if (!force && up_to_date(s, cfg_, manifest)) {
        res.skipped = true;
        res.note = "up to date";
        return res;
    }
    switch (s) {
    case Stage::Ingest: res.note = run_ingest(cfg_); break;
    case Stage::Filter: res.note = run_filter(cfg_); break;
    case Stage::Label: res.note = run_label(cfg_); break;
    case Stage::Train: res.note = run_train(cfg_); break;
    case Stage::Classify: res.note = run_classify(cfg_); break;
    case Stage::Compile: res.note = run_compile(cfg_); break;
    case Stage::Detect: res.note = run_detect(cfg_); break;
    case Stage::Report: res.note = run_report(cfg_); break;
    }
    json outs = json::object();
    for (const auto& name : res.outputs) {
        outs[name] = hex_hash(out_path(cfg_, name));
    }
    manifest.record(s, {{"inputs", current_inputs(s, cfg_)}, {"params", params_hash(s, cfg_)}, {"outputs", outs}});
    return res;
}

std::vector<StageResult> Pipeline::run(Stage from, Stage to, bool force)
{
    if (static_cast<int>(from) > static_cast<int>(to)) {
        throw ConfigError("stage range is empty: " + to_string(from) + ".." + to_string(to));
    }
    std::vector<StageResult> out;
    for (Stage s : all_stages()) {
        if (static_cast<int>(s) >= static_cast<int>(from) && static_cast<int>(s) <= static_cast<int>(to)) {
            out.push_back(run_stage(s, force));
        }
    }
    return out;
}

}  // namespace snipsec::pipeline
