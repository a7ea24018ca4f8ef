#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreathcert {

/// An argument lies outside the domain of an operation (wrong group, empty carrier, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition: a missing table entry, a length above its bound.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input. `column` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column = 0)
      : std::runtime_error(column ? what + " (at column " + std::to_string(column) + ")" : what),
        message_(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }
  /// The message without the column suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t column_;
};

}  // namespace wreathcert
