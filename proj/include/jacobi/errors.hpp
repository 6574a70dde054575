#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// Base of every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero") {}
};

/// Substitution hit a zero of the denominator.
class PoleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Unknown symbol, index out of range, mismatched presentations or configs.
class DomainError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// An internal identity that must hold did not (implementation bug).
class ConsistencyError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnsupportedError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace jacobi
