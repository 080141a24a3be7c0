#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpc {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic left the 64-bit working range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain an operation accepts (n out of table range,
// token outside 1..m, excluded parameter pair, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A configured size guard would be exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Malformed external file (b-file, table CSV). Line numbers are 1-based;
// 0 means the error is not tied to a line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The oracle found no expression within the token budget.
class NotReachableError : public Error {
 public:
  using Error::Error;
};

// A chain search ran out of its node budget. best_upper_bound is the length
// of the best chain known when the search gave up.
class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(const std::string& what, unsigned best_upper_bound)
      : Error(what), best_upper_bound_(best_upper_bound) {}

  unsigned best_upper_bound() const noexcept { return best_upper_bound_; }

 private:
  unsigned best_upper_bound_;
};

}  // namespace mpc
