#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kemeny {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge lists, bad generator parameters, bad options.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ValidationError(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A transition matrix whose chain is not irreducible, or whose
/// construction would divide by zero.
class ChainError : public Error {
 public:
  using Error::Error;
};

class ReducibleChainError : public ChainError {
 public:
  using ChainError::ChainError;
};

class SingularSystemError : public ChainError {
 public:
  using ChainError::ChainError;
};

/// A formula or search invoked outside the domain it is valid on.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Independent computations of the same quantity disagree.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace kemeny
