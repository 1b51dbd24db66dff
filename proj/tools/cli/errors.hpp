#pragma once

#include <stdexcept>
#include <string>

namespace carlitz::cli {

/// Failures of the command-line layer itself, as opposed to library errors.
class CliError : public std::runtime_error {
public:
    CliError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

inline CliError usage_error(const std::string& what) { return CliError("UsageError", what); }

}  // namespace carlitz::cli
