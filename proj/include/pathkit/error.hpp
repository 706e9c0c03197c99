#pragma once

#include <stdexcept>
#include <string>

namespace pathkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected, std::string found)
      : Error("syntax error at byte " + std::to_string(offset) + ": expected " + expected +
              ", found " + found),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  /// Human-readable set of tokens that would have been accepted.
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Raised when a fuel-bounded procedure runs out of steps.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace pathkit
