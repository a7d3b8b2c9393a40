#pragma once

#include <stdexcept>
#include <string>

namespace bergdir {

/// Argument outside the mathematical domain of an operation
/// (nonpositive Gamma argument, |<z,w>| >= R^2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A space or spec was constructed with parameters violating its invariants.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

/// Series outside its radius of convergence.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested quadrature exceeds the polynomial degree the grid integrates exactly.
class CapacityError : public std::out_of_range {
 public:
  CapacityError(int requested, int capacity)
      : std::out_of_range("quadrature capacity exceeded: degree " + std::to_string(requested) +
                          " > capacity " + std::to_string(capacity)) {}
};

}  // namespace bergdir
