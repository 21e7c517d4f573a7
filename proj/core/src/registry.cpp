#include "snipsec/registry.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"

namespace snipsec::api {

namespace {

bool package_matches(const std::string& package, const std::string& prefix)
{
    if (package.size() < prefix.size() || package.compare(0, prefix.size(), prefix) != 0) {
        return false;
    }
    return package.size() == prefix.size() || package[prefix.size()] == '.';
}

}  // namespace

ApiRegistry::ApiRegistry(std::vector<LibrarySpec> libraries, std::set<std::string> blacklist)
    : libraries_(std::move(libraries)), blacklist_(std::move(blacklist))
{
    for (auto& lib : libraries_) {
        for (auto& cls : lib.classes) {
            auto dot = cls.fqn.rfind('.');
            if (cls.simple_name.empty()) {
                cls.simple_name = dot == std::string::npos ? cls.fqn : cls.fqn.substr(dot + 1);
            }
            cls.package = dot == std::string::npos ? std::string{} : cls.fqn.substr(0, dot);
        }
    }
    reindex();
}

void ApiRegistry::reindex()
{
    fqn_index_.clear();
    simple_index_.clear();
    for (std::size_t l = 0; l < libraries_.size(); ++l) {
        for (std::size_t c = 0; c < libraries_[l].classes.size(); ++c) {
            const auto& cls = libraries_[l].classes[c];
            fqn_index_.emplace(cls.fqn, std::make_pair(l, c));
            simple_index_.emplace(cls.simple_name, cls.fqn);
        }
    }
}

void ApiRegistry::validate() const
{
    std::set<std::string> seen;
    for (const auto& lib : libraries_) {
        if (lib.name.empty()) {
            throw ConfigError("registry: library without a name");
        }
        for (const auto& cls : lib.classes) {
            if (cls.fqn.empty()) {
                throw ConfigError("registry: class without fqn in library " + lib.name);
            }
            if (!seen.insert(cls.fqn).second) {
                throw ConfigError("registry: duplicate class fqn " + cls.fqn);
            }
            if (cls.methods.empty() && !cls.marker_only) {
                throw ConfigError("registry: class " + cls.fqn + " has no methods and is not marker-only");
            }
            if (lib.security) {
                for (const auto& b : blacklist_) {
                    if (package_matches(cls.package, b)) {
                        throw ConfigError("registry: blacklist entry " + b + " covers security class " + cls.fqn);
                    }
                }
            }
        }
    }
}

std::vector<const ClassSpec*> ApiRegistry::by_simple_name(const std::string& simple) const
{
    std::vector<const ClassSpec*> out;
    auto [lo, hi] = simple_index_.equal_range(simple);
    for (auto it = lo; it != hi; ++it) {
        out.push_back(by_fqn(it->second));
    }
    return out;
}

const ClassSpec* ApiRegistry::by_fqn(const std::string& fqn) const
{
    auto it = fqn_index_.find(fqn);
    if (it == fqn_index_.end()) {
        return nullptr;
    }
    return &libraries_[it->second.first].classes[it->second.second];
}

const LibrarySpec* ApiRegistry::library_of(const std::string& fqn) const
{
    auto it = fqn_index_.find(fqn);
    return it == fqn_index_.end() ? nullptr : &libraries_[it->second.first];
}

bool ApiRegistry::is_blacklisted_package(const std::string& package) const
{
    for (const auto& b : blacklist_) {
        if (package_matches(package, b)) {
            return true;
        }
    }
    return false;
}

ApiRegistry registry_from_json(const nlohmann::json& j)
{
    try {
        int version = j.value("version", ApiRegistry::kFormatVersion);
        if (version != ApiRegistry::kFormatVersion) {
            throw ConfigError("registry: unsupported version " + std::to_string(version));
        }
        std::vector<LibrarySpec> libs;
        for (const auto& lj : j.at("libraries")) {
            LibrarySpec lib;
            lib.name = lj.at("name").get<std::string>();
            lib.security = lj.value("security", true);
            for (const auto& cj : lj.at("classes")) {
                ClassSpec cls;
                cls.fqn = cj.at("fqn").get<std::string>();
                cls.methods = cj.value("methods", std::set<std::string>{});
                cls.fields = cj.value("fields", std::set<std::string>{});
                cls.marker_only = cj.value("marker_only", false);
                lib.classes.push_back(std::move(cls));
            }
            libs.push_back(std::move(lib));
        }
        auto blacklist = j.value("blacklist", std::set<std::string>{});
        ApiRegistry reg(std::move(libs), std::move(blacklist));
        reg.validate();
        return reg;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("registry: malformed JSON: ") + e.what());
    }
}

nlohmann::json to_json(const ApiRegistry& registry)
{
    nlohmann::json libs = nlohmann::json::array();
    for (const auto& lib : registry.libraries()) {
        nlohmann::json classes = nlohmann::json::array();
        for (const auto& cls : lib.classes) {
            nlohmann::json cj{{"fqn", cls.fqn}, {"methods", cls.methods}, {"fields", cls.fields}};
            if (cls.marker_only) {
                cj["marker_only"] = true;
            }
            classes.push_back(std::move(cj));
        }
        nlohmann::json lj{{"name", lib.name}, {"classes", std::move(classes)}};
        if (!lib.security) {
            lj["security"] = false;
        }
        libs.push_back(std::move(lj));
    }
    return nlohmann::json{{"version", ApiRegistry::kFormatVersion},
                          {"libraries", std::move(libs)},
                          {"blacklist", registry.blacklist()}};
}

ApiRegistry load_registry(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open registry file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("registry " + path.string() + ": " + e.what());
    }
    return registry_from_json(j);
}

}  // namespace snipsec::api
