#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snipsec {

/// Error categories map onto CLI exit codes (see tools/snipsec_main.cpp).
enum class ErrorKind {
    Config,    // exit 2
    Upstream,  // exit 3
    Data,      // exit 4
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class UpstreamError : public Error {
public:
    explicit UpstreamError(const std::string& what) : Error(ErrorKind::Upstream, what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

/// 64-bit FNV-1a. Stable across platforms; used for content hashes and manifests.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 14695981039346656037ull) noexcept;

/// Lower-case 16-digit hex rendering of a 64-bit digest.
std::string to_hex(std::uint64_t value);

std::string to_lower(std::string_view s);
bool contains_icase(std::string_view haystack, std::string_view needle);
std::string_view trim(std::string_view s) noexcept;

}  // namespace snipsec
