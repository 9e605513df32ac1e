#pragma once

#include <stdexcept>
#include <string>

namespace mordell {

enum class ErrorKind {
  ZeroB,
  PointNotOnCurve,
  NotPrime,
  IdentityPoint,
  MalformedPoint,
  TorsionObstruction,
  UnsupportedIndex,
  RootFindingFailure,
  CaseNotApplicable,
  HypothesisViolated,
  TorsionPoint,
  NotQuasiMinimal,
  UnknownKind,
  ConvergenceFailure,
  OffRealComponent,
  TorsionInput,
  NotTwoDivisible,
  InvariantViolation,
  InadmissibleParameter,
  BoundTooLarge,
  IndefiniteForm,
  NonPositiveX,
  GeneratorNotOnCurve,
  ConfigError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mordell
