#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rghw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields or rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Polynomial or point text could not be parsed.  `offset` is the byte
/// offset into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        detail_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

/// The quotient ring has Krull dimension above one.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured candidate budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required,
                 unsigned long long budget)
      : Error(what + ": " + std::to_string(required) +
              " candidates exceed budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

}  // namespace rghw
