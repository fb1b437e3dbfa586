#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cak {

enum class ErrorKind {
    InvalidInput,   // malformed data or a violated precondition
    Genericity,     // the input violates the genericity assumptions on arrangements
    Inconsistent,   // a combinatorial object does not come from any valid sweep
    Internal,       // a postcondition check failed
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a category and a machine-readable detail string.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string detail = {})
        : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, std::string detail = {}) {
    throw Error(kind, message, std::move(detail));
}

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Verbosity is read once from the CAK_LOG environment variable
/// (error, warn, info, debug); the default is warn.
LogLevel log_level();
void log(LogLevel level, const std::string& message);

}  // namespace cak
