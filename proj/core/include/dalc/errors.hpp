#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dalc {

/// Syntax or validation failure while reading a knowledge base or query.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// The tableau exceeded its node budget. Never conflated with "unsatisfiable".
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(std::size_t budget)
      : std::runtime_error("tableau node budget exceeded (" +
                           std::to_string(budget) + " expansions)") {}
};

/// The semantic oracle was asked to handle an input outside its bounds
/// (roles present, too many atoms, or too large a domain).
class OracleBoundsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A post-construction verification failed. Signals an internal bug.
class VerificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace dalc
