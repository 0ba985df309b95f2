#include "bruhat/error.hpp"

namespace bruhat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GradeOverflow: return "GradeOverflow";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::OutsideBigCell: return "OutsideBigCell";
    case ErrorCode::InvalidSimplexPoint: return "InvalidSimplexPoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotTorusInvariant: return "NotTorusInvariant";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NonconstantRatio: return "NonconstantRatio";
    case ErrorCode::EigenNoConvergence: return "EigenNoConvergence";
    case ErrorCode::NoConventionMatches: return "NoConventionMatches";
    case ErrorCode::MultipleConventionsMatch: return "MultipleConventionsMatch";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace bruhat
