#include "circmin/errors.hpp"

namespace circmin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NonCircularRow: return "NonCircularRow";
    case ErrorCode::DominatingRow: return "DominatingRow";
    case ErrorCode::ZeroRowOrColumn: return "ZeroRowOrColumn";
    case ErrorCode::RowTooSmall: return "RowTooSmall";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::NoRowArc: return "NoRowArc";
    case ErrorCode::ZeroWinding: return "ZeroWinding";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::AmbiguousStep: return "AmbiguousStep";
    case ErrorCode::BlockStructureViolation: return "BlockStructureViolation";
    case ErrorCode::JumpCountViolation: return "JumpCountViolation";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::NonUniformParameters: return "NonUniformParameters";
    case ErrorCode::JumpSetCollision: return "JumpSetCollision";
    case ErrorCode::BadArcPresent: return "BadArcPresent";
    case ErrorCode::NotCirculantMinor: return "NotCirculantMinor";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NotAFixpoint: return "NotAFixpoint";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "UnknownError";
}

}  // namespace circmin
