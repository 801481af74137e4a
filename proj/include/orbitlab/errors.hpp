#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Input violates an operation's precondition (zero vector, mismatched spaces, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal or file. Column is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0, 0) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Two independent computations disagreed, or a theorem-level bound was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orbitlab
