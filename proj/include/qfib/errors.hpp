#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfib {

// Malformed text input.  position() is the 0-based byte offset of the
// offending character (or of the end of input when something is missing).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + detail),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A value was requested outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed the configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfib
