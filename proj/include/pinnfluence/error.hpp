#pragma once

#include <stdexcept>
#include <string>

namespace pinnfluence {

// Broken precondition on an API call (length mismatch, foreign tape node, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// User-supplied configuration or file content is invalid. `field` names the
// offending config path when known (e.g. "sampling.N_bc").
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message, std::string field = {})
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Non-finite loss, singular Hessian, optimizer breakdown.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularHessianError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A Hessian assembled at different parameters was reused.
class StaleHessianError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OracleUnavailable : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A size guard (dense Hessian, tiny-model validation) refused the request.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pinnfluence
