#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication or action table has wrong dimensions, out-of-range
/// entries, or violates an axiom.
class MalformedError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size guard or search-node budget was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace actkit
