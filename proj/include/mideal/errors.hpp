#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in polynomial rings with a different number of variables.
class RingMismatch : public Error {
 public:
  RingMismatch(std::size_t lhs, std::size_t rhs)
      : Error("ring mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs) + " variables") {}
};

/// An exponent computation left the representable range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configurable desk-scale limit (generator count, box size) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed ideal or certificate text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mideal
