#pragma once

#include <stdexcept>
#include <string>

namespace fhc {

/// Input lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical evaluation could not be completed (failed root bracket,
/// non-converging quadrature).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A radius model was rejected by the validator where a valid one is required.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fhc
