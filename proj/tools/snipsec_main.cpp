#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "snipsec/classifier.hpp"
#include "snipsec/common.hpp"
#include "snipsec/pipeline.hpp"
#include "snipsec/registry.hpp"
#include "snipsec/resolver.hpp"
#include "snipsec/rules.hpp"

namespace {

using namespace snipsec;
namespace pl = snipsec::pipeline;

struct Overrides {
    std::string config;
    std::optional<std::size_t> jobs;
    std::optional<std::uint64_t> seed;
    std::optional<double> C;
    std::optional<int> epochs;
    std::optional<std::size_t> folds;
    std::optional<double> threshold;
    bool no_class_filter = false;
    bool force = false;
};

pl::PipelineConfig load(const Overrides& o)
{
    if (o.config.empty()) {
        throw ConfigError("--config is required");
    }
    auto c = pl::load_config(o.config);
    if (o.jobs) c.jobs = *o.jobs;
    if (o.seed) c.classifier.seed = *o.seed;
    if (o.C) {
        // an explicit C overrides any configured grid
        c.classifier.C = *o.C;
        c.classifier.C_grid.clear();
    }
    if (o.epochs) c.classifier.epochs = *o.epochs;
    if (o.folds) c.classifier.folds = *o.folds;
    if (o.threshold) c.match.similarity_threshold = *o.threshold;
    if (o.no_class_filter) c.match.candidate_class_filter = false;
    return c;
}

void print(const pl::StageResult& r)
{
    std::cout << pl::to_string(r.stage) << ": " << (r.skipped ? "skipped (" + r.note + ")" : r.note) << "\n";
}

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Config: return 2;
    case ErrorKind::Upstream: return 3;
    case ErrorKind::Data: return 4;
    }
    return 1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Security analysis of copied Stack Overflow snippets in Android apps"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, "pipeline config (JSON)");
    app.add_option("--jobs", o.jobs, "worker threads per stage")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "classifier seed");

    std::optional<pl::Stage> single;
    for (pl::Stage s : pl::all_stages()) {
        auto* sub = app.add_subcommand(pl::to_string(s), "run the " + pl::to_string(s) + " stage");
        sub->add_flag("--force", o.force, "re-run even when inputs are unchanged");
        if (s == pl::Stage::Train) {
            sub->add_option("--c", o.C, "SVM regularization C");
            sub->add_option("--epochs", o.epochs);
            sub->add_option("--folds", o.folds, "cross-validation folds");
        }
        if (s == pl::Stage::Detect) {
            sub->add_option("--threshold", o.threshold, "block similarity threshold");
            sub->add_flag("--no-class-filter", o.no_class_filter);
        }
        sub->callback([&single, s] { single = s; });
    }

    std::string from = "ingest";
    std::string to = "report";
    auto* run = app.add_subcommand("run", "run a range of stages");
    run->add_option("--from", from);
    run->add_option("--to", to);
    run->add_flag("--force", o.force);
    run->add_option("--c", o.C);
    run->add_option("--epochs", o.epochs);
    run->add_option("--folds", o.folds);
    run->add_option("--threshold", o.threshold);
    run->add_flag("--no-class-filter", o.no_class_filter);

    std::string code_file;
    std::string model_file;
    auto* predict = app.add_subcommand("predict", "classify one code file with a trained model");
    predict->add_option("--model", model_file)->required();
    predict->add_option("file", code_file)->required();

    auto* label = app.add_subcommand("label-file", "apply the rule engine to one code file");
    std::string context = "any";
    std::string registry_file;
    label->add_option("file", code_file)->required();
    label->add_option("--registry", registry_file)->required();
    label->add_option("--context", context)->check(CLI::IsMember({"any", "client-server", "non-client-server"}));

    auto* catalog = app.add_subcommand("catalog", "print the rule catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; bad usage counts as a config error
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (single) {
            pl::Pipeline p(load(o));
            print(p.run_stage(*single, o.force));
        } else if (run->parsed()) {
            pl::Pipeline p(load(o));
            for (const auto& r : p.run(pl::stage_from_string(from), pl::stage_from_string(to), o.force)) {
                print(r);
            }
        } else if (predict->parsed()) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(slurp(model_file));
            } catch (const nlohmann::json::parse_error& e) {
                throw DataError(model_file + ": " + e.what());
            }
            const auto model = classify::model_from_json(j);
            const auto pr = classify::predict_code(model, slurp(code_file));
            std::cout << (pr.label > 0 ? "insecure" : "secure") << " " << pr.margin << "\n";
        } else if (label->parsed()) {
            const auto code = slurp(code_file);
            auto ctx = rules::context_from_string(context);
            if (ctx == rules::Context::Any) {
                ctx = rules::infer_context(code);
            }
            const auto rel = api::is_security_related(code, api::load_registry(registry_file));
            auto out = rules::to_json(rules::label_code(code, rel.resolved, ctx));
            out["related"] = rel.related;
            out["context"] = rules::to_string(ctx);
            std::cout << out.dump(2) << "\n";
        } else if (catalog->parsed()) {
            std::cout << rules::catalog_to_json().dump(2) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 0;
}
