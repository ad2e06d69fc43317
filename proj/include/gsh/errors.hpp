#pragma once

#include <stdexcept>
#include <string>

namespace gsh {

/// Violation of a mathematical precondition (bad genus, disconnected graph,
/// non-probability measure, ...). CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or string. Carries a JSON pointer to the offending
/// field when one is known. CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    std::string pointer;

    explicit ParseError(const std::string& message, std::string jsonPointer = {})
        : std::runtime_error(jsonPointer.empty() ? message : message + " (at " + jsonPointer + ")"),
          pointer(std::move(jsonPointer)) {}
};

}  // namespace gsh
