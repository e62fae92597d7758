#pragma once

#include <stdexcept>
#include <string>

namespace texsrc {

/// Invalid configuration or arguments (CLI maps these to exit code 1).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad or unreadable data encountered at runtime (CLI maps these to exit code 2).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace texsrc
