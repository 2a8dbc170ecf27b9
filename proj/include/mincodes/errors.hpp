#pragma once

/// @file errors.hpp
/// Exception types shared by every mincodes module.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mincodes {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  explicit InvalidModulus(std::int64_t n)
      : Error("invalid modulus " + std::to_string(n) + " (must be >= 2)") {}
};

class NotInvertible : public Error {
 public:
  NotInvertible(std::int64_t value, std::int64_t modulus)
      : Error(std::to_string(value) + " is not a unit modulo " + std::to_string(modulus)) {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when an enumeration would exceed the configured element cap.
class ThresholdExceeded : public Error {
 public:
  ThresholdExceeded(std::uint64_t cardinality, std::uint64_t threshold)
      : Error("enumeration of " + std::to_string(cardinality) + " elements exceeds threshold " +
              std::to_string(threshold)),
        cardinality_(cardinality),
        threshold_(threshold) {}

  std::uint64_t cardinality() const noexcept { return cardinality_; }
  std::uint64_t threshold() const noexcept { return threshold_; }

 private:
  std::uint64_t cardinality_;
  std::uint64_t threshold_;
};

/// Malformed matrix text. `line` and `column` are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string msg = "parse error at line " + std::to_string(line);
    if (column != 0) msg += ", column " + std::to_string(column);
    return msg + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A column multiset failed to contain k linearly independent vectors.
class IndependenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mincodes
