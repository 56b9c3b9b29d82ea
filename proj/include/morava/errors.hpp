#pragma once

#include <stdexcept>
#include <string>

namespace morava {

/// Root of every failure raised by exact arithmetic. The CLI maps this
/// family to exit code 3.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that must be divisible by 3 is not.
class NotDivisibleBy3 : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// The residue in F_9 of the operand is zero.
class NotAUnit : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Requested square-root branch does not square to the constant term.
class BadBranch : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Powers of a substitution target did not vanish within the iteration cap.
class NoConvergence : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// No 3-adic digits left to give up (division by 3 at precision 1).
class PrecisionExhausted : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class DimensionMismatch : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class AlgebraMismatch : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Two independently computed routes to the same object disagree.
class CrossCheckFailed : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

}  // namespace morava
