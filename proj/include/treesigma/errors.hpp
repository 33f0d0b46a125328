#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treesigma {

/// Input outside an operation's mathematical domain (e.g. delta < 4).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 text; `offset` is the zero-based byte at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A well-formed graph that violates a Tree invariant.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical identity or bound failed. Always a bug in this library.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace treesigma
