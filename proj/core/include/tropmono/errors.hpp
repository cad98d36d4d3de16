#pragma once

#include <stdexcept>
#include <string>

namespace tropmono {

// Domain error with a stable machine-readable code ("DimMismatch", "TooLarge", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Raised when an enumeration would exceed its size budget (CLI exit code 3).
class BudgetError : public Error {
public:
    using Error::Error;
};

[[noreturn]] inline void throw_dim_mismatch(std::size_t expected, std::size_t got) {
    throw Error("DimMismatch", "dimension mismatch: expected " + std::to_string(expected) +
                                   ", got " + std::to_string(got));
}

}  // namespace tropmono
