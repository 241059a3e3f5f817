#pragma once

#include <stdexcept>
#include <string>

namespace genus_forge {

/// Arithmetic failure inside an exact domain (division by zero, level mismatch, non-invertible series).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed user input: fixed-point data, orbits, polytope descriptions, parse errors.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Raised when input data cannot come from a
/// genuine manifold (non-integral Chern numbers, poles surviving a limit) or when an
/// algebraic identity that must hold exactly does not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genus_forge
