#include "snellfagnano/error.hpp"

namespace sf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::IdealPoint: return "IdealPoint";
    case ErrorCode::OnSideLine: return "OnSideLine";
    case ErrorCode::FZero: return "FZero";
    case ErrorCode::NoSuchPoint: return "NoSuchPoint";
    case ErrorCode::TildeDegenerate: return "TildeDegenerate";
    case ErrorCode::ConcurrencyViolation: return "ConcurrencyViolation";
    case ErrorCode::TotalInternalReflection: return "TotalInternalReflection";
    case ErrorCode::HitVertex: return "HitVertex";
    case ErrorCode::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

}  // namespace sf
