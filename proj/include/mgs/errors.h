#pragma once

#include <stdexcept>
#include <string>

namespace mgs
{

enum class ErrorKind
{
  NonPrimeCharacteristic,
  FieldTooLarge,
  ReduciblePolynomial,
  DivisionByZero,
  DimensionMismatch,
  SingularMatrix,
  IdentityMatrix,
  ZeroVector,
  OrbitLimitExceeded,
  PointNotInOrbit,
  IncompleteChain,
  GeneratorBlowup,
  GroupTooLarge,
  NotAMember,
  NoGenerators,
  InvalidWord,
  DimensionTooLarge,
  BadDimension,
  ParseError,
};

char const *to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      _kind(kind)
  {}

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace mgs
