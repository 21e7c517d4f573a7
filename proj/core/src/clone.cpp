#include "snipsec/clone.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include <nlohmann/json.hpp>

namespace snipsec::clone {

namespace {

// Upper bound on binding attempts per snippet/app pair. Real snippets have
// a handful of methods so this only guards pathological inputs.
constexpr std::size_t kSearchBudget = 200000;

bool proper_prefix(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

const std::set<std::string> kTrustManagerMethods = {"checkClientTrusted", "checkServerTrusted",
                                                    "getAcceptedIssuers"};

}  // namespace

void MatchConfig::validate() const
{
    if (!(similarity_threshold > 0.0 && similarity_threshold <= 1.0)) {
        throw ConfigError("similarity threshold must be in (0, 1], got " + std::to_string(similarity_threshold));
    }
    if (!(containment_threshold > 0.0 && containment_threshold <= 1.0)) {
        throw ConfigError("containment threshold must be in (0, 1], got " + std::to_string(containment_threshold));
    }
}

SemanticVector embed(const ir::IrMethod& m, const ir::MethodPdg& pdg, const std::vector<std::size_t>& block)
{
    SemanticVector v{};
    for (std::size_t node : block) {
        const auto k = static_cast<std::size_t>(m.instructions.at(node).kind);
        v[2 * k] += 1;
        v[2 * k + 1] = std::max<std::uint32_t>(v[2 * k + 1], static_cast<std::uint32_t>(pdg.out_degree.at(node)));
    }
    return v;
}

double jaccard_similarity(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y)
{
    if (x.size() != y.size()) {
        throw DataError("semantic vectors differ in length: " + std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()));
    }
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lo += std::min(x[i], y[i]);
        hi += std::max(x[i], y[i]);
    }
    if (hi == 0) {
        return 1.0;
    }
    return static_cast<double>(lo) / static_cast<double>(hi);
}

PreparedMethod prepare(ir::IrMethod m)
{
    PreparedMethod p;
    p.pdg = ir::build_pdg(m);
    p.method = std::move(m);
    p.vectors.reserve(p.pdg.semantic_blocks.size());
    for (const auto& b : p.pdg.semantic_blocks) {
        p.vectors.push_back(embed(p.method, p.pdg, b));
    }
    return p;
}

std::optional<MethodMatch> match_method(const PreparedMethod& sm, const PreparedMethod& am, const MatchConfig& cfg)
{
    if (sm.method.empty()) {
        return std::nullopt;
    }
    if (jaccard_containment(sm.method.security_method_names, am.method.security_method_names) <
            cfg.containment_threshold ||
        jaccard_containment(sm.method.constants, am.method.constants) < cfg.containment_threshold) {
        return std::nullopt;
    }
    const std::size_t ns = sm.vectors.size();
    const std::size_t na = am.vectors.size();
    if (ns > na) {
        return std::nullopt;
    }

    std::vector<std::vector<double>> sim(ns, std::vector<double>(na, 0.0));
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            sim[i][j] = jaccard_similarity(sm.vectors[i], am.vectors[j]);
            if (sim[i][j] >= cfg.similarity_threshold) {
                pairs.emplace_back(sim[i][j], i, j);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) {
            return std::get<0>(a) > std::get<0>(b);
        }
        return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
    });

    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> of_snippet(ns, kFree);
    std::vector<std::size_t> of_app(na, kFree);
    for (const auto& [s, i, j] : pairs) {
        if (of_snippet[i] == kFree && of_app[j] == kFree) {
            of_snippet[i] = j;
            of_app[j] = i;
        }
    }

    // Greedy can strand a block whose only partners were taken; augmenting
    // paths recover a maximum-cardinality assignment without disturbing
    // more than needed.
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (std::size_t j = 0; j < na; ++j) {
            if (sim[i][j] < cfg.similarity_threshold || seen[j] != 0) {
                continue;
            }
            seen[j] = 1;
            if (of_app[j] == kFree || augment(of_app[j])) {
                of_app[j] = i;
                of_snippet[i] = j;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < ns; ++i) {
        if (of_snippet[i] == kFree) {
            seen.assign(na, 0);
            if (!augment(i)) {
                return std::nullopt;
            }
        }
    }

    MethodMatch mm;
    mm.assigned_blocks = of_snippet;
    for (std::size_t i = 0; i < ns; ++i) {
        mm.block_scores.push_back(sim[i][of_snippet[i]]);
    }
    return mm;
}

bool is_trustmanager_method(const std::string& name)
{
    return kTrustManagerMethods.count(name) != 0;
}

bool match_empty_trustmanager(const PreparedMethod& sm, const PreparedMethod& am)
{
    return sm.method.empty() && am.method.empty() && is_trustmanager_method(sm.method.name()) &&
           sm.method.name() == am.method.name();
}

CompiledApp make_app(std::string app_id, std::vector<ir::IrMethod> methods, std::vector<ir::IrClass> classes)
{
    CompiledApp app;
    app.app_id = std::move(app_id);
    std::stable_sort(methods.begin(), methods.end(),
                     [](const auto& a, const auto& b) { return a.qualified_path < b.qualified_path; });
    for (auto& m : methods) {
        app.methods.push_back(prepare(std::move(m)));
    }
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
    app.classes = std::move(classes);
    return app;
}

CompiledSnippet make_snippet(std::string snippet_id, std::vector<ir::IrMethod> methods)
{
    CompiledSnippet s;
    s.snippet_id = std::move(snippet_id);
    std::stable_sort(methods.begin(), methods.end(),
                     [](const auto& a, const auto& b) { return a.qualified_path < b.qualified_path; });
    for (auto& m : methods) {
        s.methods.push_back(prepare(std::move(m)));
    }
    return s;
}

bool matchable(const CompiledSnippet& s)
{
    return std::any_of(s.methods.begin(), s.methods.end(), [](const PreparedMethod& p) {
        return !p.method.security_method_names.empty() ||
               (p.method.empty() && is_trustmanager_method(p.method.name()));
    });
}

std::string path_string(const std::vector<std::string>& path)
{
    std::string out;
    for (const auto& p : path) {
        if (!out.empty()) {
            out.push_back('.');
        }
        out += p;
    }
    return out;
}

std::set<std::string> candidate_classes(const CompiledApp& app)
{
    std::set<std::string> out;
    for (const auto& m : app.methods) {
        if (!m.method.security_method_names.empty() && !m.method.qualified_path.empty()) {
            out.insert(m.method.qualified_path.front());
        }
    }
    for (const auto& c : app.classes) {
        if ((c.security_supertype || c.instantiates_security_type) && !c.path.empty()) {
            out.insert(c.path.front());
        }
    }
    return out;
}

namespace {

struct Candidate {
    std::size_t app_method;
    bool trustmanager = false;
    std::vector<double> scores;
};

class Binder {
public:
    Binder(const CompiledSnippet& s, const CompiledApp& app, std::vector<std::vector<Candidate>> cands)
        : s_(s), app_(app), cands_(std::move(cands)), chosen_(s.methods.size(), nullptr)
    {
        for (std::size_t i = 0; i < s_.methods.size(); ++i) {
            order_.push_back(i);
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return cands_[a].size() < cands_[b].size(); });
    }

    bool run() { return step(0); }

    const std::vector<const Candidate*>& chosen() const { return chosen_; }

private:
    bool consistent(const std::vector<std::string>& sc, const std::vector<std::string>& ac) const
    {
        auto it = class_map_.find(sc);
        if (it != class_map_.end()) {
            return it->second == ac;
        }
        for (const auto& [q, fq] : class_map_) {
            if (fq == ac) {
                return false;
            }
            if (proper_prefix(q, sc) && !proper_prefix(fq, ac)) {
                return false;
            }
            if (proper_prefix(sc, q) && !proper_prefix(ac, fq)) {
                return false;
            }
        }
        return true;
    }

    bool step(std::size_t depth)
    {
        if (depth == order_.size()) {
            return true;
        }
        const std::size_t si = order_[depth];
        const auto sc = s_.methods[si].method.class_path();
        for (const auto& c : cands_[si]) {
            if (++budget_ > kSearchBudget) {
                return false;
            }
            if (used_.count(c.app_method) != 0) {
                continue;
            }
            const auto ac = app_.methods[c.app_method].method.class_path();
            if (!consistent(sc, ac)) {
                continue;
            }
            const bool fresh = class_map_.count(sc) == 0;
            if (fresh) {
                class_map_.emplace(sc, ac);
            }
            used_.insert(c.app_method);
            chosen_[si] = &c;
            if (step(depth + 1)) {
                return true;
            }
            chosen_[si] = nullptr;
            used_.erase(c.app_method);
            if (fresh) {
                class_map_.erase(sc);
            }
        }
        return false;
    }

    const CompiledSnippet& s_;
    const CompiledApp& app_;
    std::vector<std::vector<Candidate>> cands_;
    std::vector<std::size_t> order_;
    std::vector<const Candidate*> chosen_;
    std::map<std::vector<std::string>, std::vector<std::string>> class_map_;
    std::set<std::size_t> used_;
    std::size_t budget_ = 0;
};

}  // namespace

std::optional<CloneMatch> match_snippet(const CompiledSnippet& s, const CompiledApp& app, const MatchConfig& cfg)
{
    if (s.methods.empty() || !matchable(s)) {
        return std::nullopt;
    }
    std::set<std::string> allowed;
    if (cfg.candidate_class_filter) {
        allowed = candidate_classes(app);
        if (allowed.empty()) {
            return std::nullopt;
        }
    }

    std::vector<std::vector<Candidate>> cands(s.methods.size());
    for (std::size_t i = 0; i < s.methods.size(); ++i) {
        const auto& sm = s.methods[i];
        const bool tm_case = sm.method.empty();
        for (std::size_t j = 0; j < app.methods.size(); ++j) {
            const auto& am = app.methods[j];
            if (cfg.candidate_class_filter && allowed.count(am.method.qualified_path.front()) == 0) {
                continue;
            }
            if (tm_case) {
                if (match_empty_trustmanager(sm, am)) {
                    cands[i].push_back(Candidate{j, true, {}});
                }
            } else if (auto mm = match_method(sm, am, cfg)) {
                cands[i].push_back(Candidate{j, false, std::move(mm->block_scores)});
            }
        }
        if (cands[i].empty()) {
            return std::nullopt;
        }
    }

    Binder binder(s, app, std::move(cands));
    if (!binder.run()) {
        return std::nullopt;
    }
    CloneMatch out;
    out.snippet_id = s.snippet_id;
    out.app_id = app.app_id;
    for (std::size_t i = 0; i < s.methods.size(); ++i) {
        const Candidate* c = binder.chosen()[i];
        const std::string key = path_string(s.methods[i].method.qualified_path);
        out.bindings[key] = path_string(app.methods[c->app_method].method.qualified_path);
        out.scores[key] = c->scores;
        out.empty_trustmanager_case = out.empty_trustmanager_case || c->trustmanager;
    }
    return out;
}

nlohmann::json to_json(const CloneMatch& m)
{
    return nlohmann::json{{"snippet_id", m.snippet_id},
                          {"app_id", m.app_id},
                          {"bindings", m.bindings},
                          {"scores", m.scores},
                          {"flags", {{"empty_trustmanager_case", m.empty_trustmanager_case}}}};
}

CloneMatch match_from_json(const nlohmann::json& j)
{
    try {
        CloneMatch m;
        m.snippet_id = j.at("snippet_id").get<std::string>();
        m.app_id = j.at("app_id").get<std::string>();
        m.bindings = j.at("bindings").get<std::map<std::string, std::string>>();
        m.scores = j.at("scores").get<std::map<std::string, std::vector<double>>>();
        m.empty_trustmanager_case = j.at("flags").at("empty_trustmanager_case").get<bool>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed clone match: ") + e.what());
    }
}

}  // namespace snipsec::clone
