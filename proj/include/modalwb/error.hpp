#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modalwb {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, mismatched alphabets, invalid partitions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Formula text that does not conform to the grammar. `column()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A brute-force enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search (path enumeration, rejection sampling) ran out of budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace modalwb
