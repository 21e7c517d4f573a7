#pragma once

// Catalog of security libraries, their classes and members, plus the
// package blacklist used by the snippet filter.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace snipsec::api {

struct ClassSpec {
    std::string fqn;
    std::string simple_name;
    std::string package;
    std::set<std::string> methods;  // may contain "<init>"
    std::set<std::string> fields;
    bool marker_only = false;
};

struct LibrarySpec {
    std::string name;
    // Non-security libraries hold look-alike classes (Base64, Random, ...)
    // so that resolution can land on them and be dropped by the blacklist.
    bool security = true;
    std::vector<ClassSpec> classes;
};

class ApiRegistry {
public:
    static constexpr int kFormatVersion = 1;

    ApiRegistry() = default;
    ApiRegistry(std::vector<LibrarySpec> libraries, std::set<std::string> blacklist);

    /// Throws ConfigError when an invariant is violated.
    void validate() const;

    const std::vector<LibrarySpec>& libraries() const noexcept { return libraries_; }
    const std::set<std::string>& blacklist() const noexcept { return blacklist_; }

    std::vector<const ClassSpec*> by_simple_name(const std::string& simple) const;
    const ClassSpec* by_fqn(const std::string& fqn) const;
    /// Name of the library owning `fqn`, empty if unknown.
    const LibrarySpec* library_of(const std::string& fqn) const;

    bool is_blacklisted_package(const std::string& package) const;
    std::size_t class_count() const noexcept { return fqn_index_.size(); }

private:
    void reindex();

    std::vector<LibrarySpec> libraries_;
    std::set<std::string> blacklist_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> fqn_index_;
    std::multimap<std::string, std::string> simple_index_;
};

ApiRegistry registry_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ApiRegistry& registry);
ApiRegistry load_registry(const std::filesystem::path& path);

}  // namespace snipsec::api
