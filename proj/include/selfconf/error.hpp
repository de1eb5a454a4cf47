#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfconf {

enum class ErrorCode {
  NotSquare,
  NegativeEntry,
  NonzeroDiagonal,
  RowSumOutOfTolerance,
  NotStronglyConnected,
  Periodic,
  EmptySubset,
  NodeOutOfRange,
  SingularSystem,
  StubbornPresent,
  InvalidProfile,
  DimensionMismatch,
  NonpositiveVariance,
  AgentOutOfRange,
  NonInteriorStart,
  StepTooLarge,
  InvalidConfig,
  NoConvergence,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// All model and numerical failures surface as this exception; the code lets
/// callers (and the CLI exit-status mapping) branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace selfconf
