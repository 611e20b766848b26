#include "rlslp/error.hpp"

namespace rlslp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EqualChildren: return "EqualChildren";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::UnclassifiedSymbol: return "UnclassifiedSymbol";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyFragment: return "EmptyFragment";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::RatioViolation: return "RatioViolation";
    case ErrorCode::BadIndexFile: return "BadIndexFile";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace rlslp
