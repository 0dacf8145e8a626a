#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgw {

// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the supported families or parameter ranges (exit code 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A resource cap (group order, tuple count, enumeration size) would be exceeded (exit code 3).
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagree, or a value that must be integral is not (exit code 4).
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Invariant violated inside an algorithm that cannot fail on valid input.
class InternalError : public Error {
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

}  // namespace cgw
