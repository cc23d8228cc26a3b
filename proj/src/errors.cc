#include "mgs/errors.h"

namespace mgs
{

char const *to_string(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::IdentityMatrix: return "IdentityMatrix";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OrbitLimitExceeded: return "OrbitLimitExceeded";
    case ErrorKind::PointNotInOrbit: return "PointNotInOrbit";
    case ErrorKind::IncompleteChain: return "IncompleteChain";
    case ErrorKind::GeneratorBlowup: return "GeneratorBlowup";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NoGenerators: return "NoGenerators";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

} // namespace mgs
