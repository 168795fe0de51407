#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zinc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element index outside 0..order-1 of the ring it was used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A checked precondition of an operation failed (e.g. a non-central idempotent).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size gate, threshold or budget refused the computation.
class GateError : public Error {
 public:
  using Error::Error;
};

/// Malformed ring-expression text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected)
      : Error(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Well-formed syntax with meaningless parameters (Z(0), GF(6), M(0, ...)).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// A post-check on a computed result failed; indicates an arithmetic bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zinc
