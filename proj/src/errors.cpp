#include "thf/errors.hpp"

namespace thf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTHFE: return "InvalidTHFE";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::IncompleteTransition: return "IncompleteTransition";
    case ErrorCode::DuplicateTransition: return "DuplicateTransition";
    case ErrorCode::DuplicateLevel: return "DuplicateLevel";
    case ErrorCode::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::InvalidStates: return "InvalidStates";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::WordTooLong: return "WordTooLong";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace thf
