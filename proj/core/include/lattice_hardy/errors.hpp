#pragma once

#include <stdexcept>
#include <string>

namespace lattice_hardy {

/// A documented hypothesis on (k, d, m, alpha, ...) is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An input object breaks an operation precondition (e.g. u(0) != 0).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed arguments: empty tables, too few fit points, bad axis.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A run would exceed a configured size budget; raised before allocation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations, double last_residual)
      : std::runtime_error(what), iterations_(iterations), last_residual_(last_residual) {}

  int iterations() const noexcept { return iterations_; }
  double last_residual() const noexcept { return last_residual_; }

 private:
  int iterations_;
  double last_residual_;
};

}  // namespace lattice_hardy
