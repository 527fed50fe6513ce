#pragma once

#include <stdexcept>
#include <string>

namespace fanofol {

// Every failure the library reports derives from Error, so callers that only
// care about "did it work" can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (rationals, JSON documents, range flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on a mathematical argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The anticanonical class of a cone foliation is not ample.
class NotFanoError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A synthesis request lies outside the constructive range.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A guarded search ran past its bound; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fanofol
