#pragma once

#include <stdexcept>
#include <string>

namespace tensorbound {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input data (non-Hermitian operator, bad file contents, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Mismatched operand dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A dense tensor product would exceed the configured dimension cap.
class DimensionCapError : public Error {
 public:
  using Error::Error;
};

/// File system failures.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tensorbound
