#pragma once

#include <stdexcept>
#include <string>

namespace gd {

enum class ErrorKind {
  InvalidArgument,
  NotConnected,
  NotEulerian,
  NotPartialThreeTree,
  NotTwoConnected,
  OddVertex,
  ChordLimitExceeded,
  NotDisjoint,
  NotK5Like,
  NotK5MinusSubdivision,
  InvalidLift,
  EdgeNotInDecomposition,
  SideConditionViolated,
  PreconditionViolated,
  BoundViolated,
  UnreachableCase,
  EndgameTooLarge,
  MaxDegreeExceeded,
  EndpointMismatch,
  NotEdgeDisjoint,
  GirthTooSmall,
  StructuralAssumptionViolated,
  CapExceeded,
  NotEvenGraph,
  InvalidSpec,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string state = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        state_(std::move(state)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Free-form dump of the instance that triggered the error (edge list etc.).
  const std::string& state() const noexcept { return state_; }

 private:
  ErrorKind kind_;
  std::string state_;
};

}  // namespace gd
