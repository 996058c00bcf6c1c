#include "cremona/error.hpp"

namespace cremona {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::CommonFactor: return "CommonFactor";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NotBirational: return "NotBirational";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::IntegralityFailure: return "IntegralityFailure";
    case ErrorKind::EmptyBaseLocus: return "EmptyBaseLocus";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::NegativeMilnorSum: return "NegativeMilnorSum";
    case ErrorKind::BoundViolation: return "BoundViolation";
  }
  return "Unknown";
}

}  // namespace cremona
