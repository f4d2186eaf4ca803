#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cimp {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. The message already carries " at line N".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " at line " + std::to_string(line)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A configured size or iteration cap was exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace cimp
