#pragma once

#include <stdexcept>
#include <string>

namespace segline {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; message carries the path and 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& origin, std::size_t line, const std::string& what)
        : Error(origin + ":" + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A gold analysis that cannot be aligned to its super-token surface.
class UnalignableTokenError : public Error {
public:
    using Error::Error;
};

/// Corrupt, truncated, or wrong-version model file.
class ModelFormatError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (bad paths, out-of-range values).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace segline
