#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dslice {

/// Raised when an operation is called outside its domain (for example a
/// negative continued fraction of a number <= 1, or a kernel vector of a
/// nonsingular plumbing).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the expression parser. `position()` is a byte offset into the
/// input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A structural statement that must hold for every lattice factorization
/// failed. Seeing one of these means a bug, not bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dslice
