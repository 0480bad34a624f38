#include "ekit/error.hpp"

namespace ekit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::BadExceptionalPoints: return "BadExceptionalPoints";
    case ErrorCode::NoSuchProjection: return "NoSuchProjection";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InconsistentMultiplicities: return "InconsistentMultiplicities";
    case ErrorCode::RecipeHypothesisFailed: return "RecipeHypothesisFailed";
    case ErrorCode::Ex1PreconditionFailed: return "Ex1PreconditionFailed";
    case ErrorCode::NotSameMultiset: return "NotSameMultiset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

}  // namespace ekit
