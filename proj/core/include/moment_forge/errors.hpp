#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moment_forge {

/// Caller violated a precondition (arity mismatch, wrong functional, bad
/// flag value). Mapped to exit code 2 by the CLI.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial text. Line and column are 1-based.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column),
        reason_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

/// Exponent overflow or total-degree cap exceeded.
class LimitError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace moment_forge
