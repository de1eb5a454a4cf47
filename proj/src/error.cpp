#include "selfconf/error.hpp"

namespace selfconf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::RowSumOutOfTolerance: return "RowSumOutOfTolerance";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::Periodic: return "Periodic";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::StubbornPresent: return "StubbornPresent";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonpositiveVariance: return "NonpositiveVariance";
    case ErrorCode::AgentOutOfRange: return "AgentOutOfRange";
    case ErrorCode::NonInteriorStart: return "NonInteriorStart";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace selfconf
