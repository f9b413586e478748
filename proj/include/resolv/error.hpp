#pragma once

#include <stdexcept>
#include <string>

namespace resolv {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  InvalidParameters,
  DivisionByZero,
  ZeroCode,
  BudgetExceeded,
  NotMinimal,
  RepeatedShift,
  NonIntegralBetti,
  NegativeBetti,
  SingularSystem,
  TooManyUnknowns,
  InconsistentSystem,
  OutOfRange,
  DegreeTooHigh,
  LengthTooLong,
  Degenerate,
  OddCharacteristic,
  InvalidDivisor,
  UnsupportedQ,
  UnknownFamily,
  ConstructionFailed,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure in the library surfaces as this exception; kind() is stable
/// and drives the CLI exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// 2 parameter error, 3 budget, 4 solver inconsistency, 1 anything else.
int exit_code(ErrorKind kind);

}  // namespace resolv
