#pragma once

#include <stdexcept>
#include <string>

namespace rsp {

// Runtime failure carrying a short machine-readable code ("empty-archive",
// "domain-violation", ...). The code is also the prefix of what().
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail), code_(std::move(code)) {}
    explicit Error(std::string code) : Error(std::move(code), "") {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid user-supplied configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rsp
