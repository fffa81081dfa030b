#pragma once

#include <stdexcept>
#include <string>

namespace landau {

// Failure categories. The CLI maps every DomainError to exit code 2 and every
// NumericalError to exit code 3.
enum class ErrorKind {
  domain,
  pole,
  overflow,
  ceiling_exceeded,
  singularity,
  non_convergence,
  zero_proximity,
  refinement_failure,
  bracketing_failure,
  step_underflow,
  sample_budget,
  non_closure,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Precondition violated by the caller (bad argument, out-of-range energy, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

// A numerical procedure could not reach its accuracy target.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace landau
