#pragma once

#include <stdexcept>
#include <string>

namespace mlq {

// Base of every error raised by the library. Each subclass maps to a distinct
// CLI exit status (see experiments.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two objects that must share a quantum alphabet do not.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// A string (input or produced codeword) is longer than the configured L_max.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

// A vector has support outside the basis strings an operator is defined on,
// e.g. a source string whose length is not a multiple of the translator block.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the desk-scale guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Binary input that is not a concatenation of codewords.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// A stated invariant (trace, Kraus completeness, isometry, ...) was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mlq
