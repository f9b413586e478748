#include "resolv/error.hpp"

namespace resolv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::RepeatedShift: return "RepeatedShift";
    case ErrorKind::NonIntegralBetti: return "NonIntegralBetti";
    case ErrorKind::NegativeBetti: return "NegativeBetti";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::TooManyUnknowns: return "TooManyUnknowns";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::LengthTooLong: return "LengthTooLong";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::OddCharacteristic: return "OddCharacteristic";
    case ErrorKind::InvalidDivisor: return "InvalidDivisor";
    case ErrorKind::UnsupportedQ: return "UnsupportedQ";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
      return 3;
    case ErrorKind::RepeatedShift:
    case ErrorKind::NonIntegralBetti:
    case ErrorKind::NegativeBetti:
    case ErrorKind::SingularSystem:
    case ErrorKind::TooManyUnknowns:
    case ErrorKind::InconsistentSystem:
      return 4;
    case ErrorKind::ConstructionFailed:
      return 1;
    default:
      return 2;
  }
}

}  // namespace resolv
