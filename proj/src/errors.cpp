#include "linkforge/errors.hpp"

namespace linkforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTuple: return "MalformedTuple";
    case ErrorCode::DuplicateEdgeUse: return "DuplicateEdgeUse";
    case ErrorCode::BrokenTraversal: return "BrokenTraversal";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadIndexSequence: return "BadIndexSequence";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WrongComponentCount: return "WrongComponentCount";
    case ErrorCode::NonzeroLinking: return "NonzeroLinking";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace linkforge
