#include "plstab/error.hpp"

namespace plstab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::RealizationMismatch: return "RealizationMismatch";
    case ErrorCode::NonCoplanarOverlap: return "NonCoplanarOverlap";
    case ErrorCode::PointOutsideComplex: return "PointOutsideComplex";
    case ErrorCode::NondegenerateViolation: return "NondegenerateViolation";
    case ErrorCode::OutOfInterval: return "OutOfInterval";
    case ErrorCode::NotFixedPoint: return "NotFixedPoint";
    case ErrorCode::SideOutsideInterval: return "SideOutsideInterval";
    case ErrorCode::OrientationReversing: return "OrientationReversing";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::FixIsEverything: return "FixIsEverything";
    case ErrorCode::FixIsEmpty: return "FixIsEmpty";
    case ErrorCode::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorCode::VertexNotInComplex: return "VertexNotInComplex";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace plstab
