#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posethom {

enum class ErrorCode {
  // space model
  EmptyInput,
  DuplicateName,
  UnknownPoint,
  UncoveredPoint,
  GroundMismatch,
  InvalidTopology,
  // posets
  InvalidOrder,
  SizeLimit,
  MissingCorank,
  NoUniqueExtremum,
  // exact algebra
  NotAComplex,
  ShapeMismatch,
  // simplicial
  TruncationTooSmall,
  // functors
  PathDependence,
  WrongDirection,
  NotInducedSubposet,
  NotACoveringPair,
  MissingRank,
  NotGraded,
  ComparisonFailure,
  // coloured
  NoUniqueMax,
  // io
  ParseError,
  ValidationError,
  UnknownSignature,
  UnknownField,
  InfeasibleRequest,
  UsageError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code.
///
/// `cause` is set when an error from a lower layer is wrapped, e.g. a
/// ValidationError raised by the loader around an UncoveredPoint.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<ErrorCode> cause = std::nullopt)
      : std::runtime_error(message), code_(code), cause_(cause) {}

  [[nodiscard]] ErrorCode code() const { return code_; }
  [[nodiscard]] std::optional<ErrorCode> cause() const { return cause_; }

 private:
  ErrorCode code_;
  std::optional<ErrorCode> cause_;
};

}  // namespace posethom
