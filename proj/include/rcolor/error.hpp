#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcolor {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad vertex id, bad index, ...).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// A numeric parameter lies outside the domain where a formula is defined.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The input is too large for the requested exact computation.
class CapacityError : public Error
{
public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
        : Error((source.empty() ? std::string("line ") : source + ":") + std::to_string(line) + ": " + detail),
          line_(line), detail_(detail)
    {
    }

    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

} // namespace rcolor
