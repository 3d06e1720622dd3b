// Exception types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semascore {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// File could not be opened or read.
class IoError : public Error {
public:
  using Error::Error;
};

// A record or file had invalid content. Carries the 1-based line number
// of the offending record when known (0 = not applicable).
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_ = 0;
};

// A node, cluster, or key was not found.
class LookupError : public Error {
public:
  using Error::Error;
};

// Input data was readable but unusable (e.g. a corpus with no documents).
class DataError : public Error {
public:
  using Error::Error;
};

// An operation precondition or configuration constraint was violated.
class ValidationError : public Error {
public:
  using Error::Error;
};

}  // namespace semascore
