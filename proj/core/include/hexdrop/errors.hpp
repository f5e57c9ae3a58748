#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hexdrop {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of a distribution or shape.
class DomainError : public Error {
public:
    using Error::Error;
};

// A network description is semantically invalid.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A lattice index (m, n) whose parities differ; not a hex-lattice cell.
class ParityError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Malformed config text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A point could not be assigned to any bin of a partition.
class BinningError : public Error {
public:
    using Error::Error;
};

// Writing to an output sink failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace hexdrop
