#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorKind {
  Malformed,
  SingularMatrix,
  NotStochastic,
  CommonFactor,
  DegreeZero,
  NotBirational,
  UnsupportedDimension,
  UnsupportedDegree,
  ArityMismatch,
  IndexOutOfRange,
  ZeroPolynomial,
  NotHomogeneous,
  // Everything below is a failed mathematical assertion, never bad input.
  IntegralityFailure,
  EmptyBaseLocus,
  InternalDisagreement,
  NegativeMilnorSum,
  BoundViolation,
};

std::string_view to_string(ErrorKind kind);

constexpr bool is_theory_violation(ErrorKind kind) {
  return kind >= ErrorKind::IntegralityFailure;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a theorem-backed assertion fails. Any occurrence is a bug in
/// this library or a counterexample; callers should surface it, not recover.
class TheoryViolation : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  if (is_theory_violation(kind)) throw TheoryViolation(kind, what);
  throw Error(kind, what);
}

}  // namespace cremona
