#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eulercat {

// Base of all library errors. `code()` is a stable machine-readable token
// (e.g. "NO_MOBIUS_INVERSION") used by the CLI for its reason line.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// "The math says no": well-formed input, negative mathematical outcome.
// Mapped to exit code 1 by the CLI.
class MathError : public Error {
public:
    using Error::Error;
};

// Malformed input: unparsable file, unknown name, out-of-range parameter.
// Mapped to exit code 2 by the CLI.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace eulercat
