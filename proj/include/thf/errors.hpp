#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thf {

enum class ErrorCode {
  InvalidTHFE,
  DegreeOutOfRange,
  ClosureBudgetExceeded,
  UnknownSymbol,
  UnknownState,
  AlphabetMismatch,
  IncompleteTransition,
  DuplicateTransition,
  DuplicateLevel,
  InvalidAlphabet,
  InvalidStates,
  SyntaxError,
  WordTooLong,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace thf
