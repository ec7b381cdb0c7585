#pragma once

#include <stdexcept>
#include <string>

namespace gfg {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a structural invariant (undeclared state, foreign set, bad strategy step...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Textual input could not be parsed. Carries a 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration cap or a search budget would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input uses a feature an operation deliberately does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfg
