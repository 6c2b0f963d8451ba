#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace losq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (negative n̄, η outside [0,1], ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operator word longer than the supported degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The Fock truncation loses more norm than the budget allows, or a cutoff
/// schedule ran out before converging.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (CSV rows, unknown figure ids, unwritable paths).
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace losq
