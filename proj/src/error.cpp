#include "posethom/error.hpp"

namespace posethom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::UncoveredPoint: return "UncoveredPoint";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::InvalidTopology: return "InvalidTopology";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::MissingCorank: return "MissingCorank";
    case ErrorCode::NoUniqueExtremum: return "NoUniqueExtremum";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::PathDependence: return "PathDependence";
    case ErrorCode::WrongDirection: return "WrongDirection";
    case ErrorCode::NotInducedSubposet: return "NotInducedSubposet";
    case ErrorCode::NotACoveringPair: return "NotACoveringPair";
    case ErrorCode::MissingRank: return "MissingRank";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::ComparisonFailure: return "ComparisonFailure";
    case ErrorCode::NoUniqueMax: return "NoUniqueMax";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownSignature: return "UnknownSignature";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::InfeasibleRequest: return "InfeasibleRequest";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace posethom
