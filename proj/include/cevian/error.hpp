#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cevian {

enum class ErrorCode {
  ZeroVector,
  EqualPoints,
  EqualLines,
  NotCollinear,
  DegenerateQuadruple,
  CoincidentArgument,
  InfiniteArgument,
  CollinearInput,
  InfiniteInput,
  DegeneratePosition,
  DirectionOnAxis,
  NotADirection,
  NotAffine,
  NotInvertible,
  TranslationNoFixedPoint,
  NonIsolatedFixedPoints,
  OnSideLine,
  UnderDetermined,
  FourCollinear,
  RankDeficient,
  Overconstrained,
  KnownNotIncident,
  TangentLine,
  DifferentBaseLines,
  DegenerateQuadrangle,
  DegenerateInput,
  DegenerateConic,
  GuardViolation,
  VertexInput,
  InfinitePoint,
  FixedPointInput,
  InfiniteConjugate,
  NotPerspective,
  NotOnCircumconic,
  InternalInconsistency,
  RetryExhausted,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an object is requested whose defining hypothesis fails.
class GuardViolation : public GeometryError {
 public:
  explicit GuardViolation(std::string guard);

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

}  // namespace cevian
