#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercayley {

/// Malformed textual input (ring specs, descriptors, config files).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::invalid_argument(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded.
class BoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An exact verification failed. Signals a construction bug or a false identity.
class CheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace supercayley
