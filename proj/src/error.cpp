#include "cevian/error.hpp"

namespace cevian {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::EqualLines: return "EqualLines";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::CoincidentArgument: return "CoincidentArgument";
    case ErrorCode::InfiniteArgument: return "InfiniteArgument";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::InfiniteInput: return "InfiniteInput";
    case ErrorCode::DegeneratePosition: return "DegeneratePosition";
    case ErrorCode::DirectionOnAxis: return "DirectionOnAxis";
    case ErrorCode::NotADirection: return "NotADirection";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::TranslationNoFixedPoint: return "TranslationNoFixedPoint";
    case ErrorCode::NonIsolatedFixedPoints: return "NonIsolatedFixedPoints";
    case ErrorCode::OnSideLine: return "OnSideLine";
    case ErrorCode::UnderDetermined: return "UnderDetermined";
    case ErrorCode::FourCollinear: return "FourCollinear";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::Overconstrained: return "Overconstrained";
    case ErrorCode::KnownNotIncident: return "KnownNotIncident";
    case ErrorCode::TangentLine: return "TangentLine";
    case ErrorCode::DifferentBaseLines: return "DifferentBaseLines";
    case ErrorCode::DegenerateQuadrangle: return "DegenerateQuadrangle";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::GuardViolation: return "GuardViolation";
    case ErrorCode::VertexInput: return "VertexInput";
    case ErrorCode::InfinitePoint: return "InfinitePoint";
    case ErrorCode::FixedPointInput: return "FixedPointInput";
    case ErrorCode::InfiniteConjugate: return "InfiniteConjugate";
    case ErrorCode::NotPerspective: return "NotPerspective";
    case ErrorCode::NotOnCircumconic: return "NotOnCircumconic";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

GuardViolation::GuardViolation(std::string guard)
    : GeometryError(ErrorCode::GuardViolation, guard), guard_(std::move(guard)) {}

}  // namespace cevian
