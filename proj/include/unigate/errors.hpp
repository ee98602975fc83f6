#pragma once

#include <stdexcept>
#include <string>

namespace unigate {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or bipartite splits that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input matrix is not unitary within tolerance.
class NotUnitaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Damping vector outside the unistochastic region.
class NotUnistochasticError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Schmidt vector for which the interaction content is not unique.
class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Schmidt vector that no two-qubit unitary can have.
class NotRealizableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure failed its own consistency check.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix or channel file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace unigate
