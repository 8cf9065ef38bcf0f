#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spirale {

enum class ErrorCode {
  DuplicateSymbol,
  AlphabetTooSmall,
  NotInAlphabet,
  EmptyKey,
  KeyLengthMismatch,
  InvalidLag,
  BadSeedLength,
  ValueOutOfRange,
  EmptyMessage,
  ResultEmpty,
  BadExtractLength,
  SetSizeMismatch,
  TooShort,
  BadLag,
  BadPosition,
  BudgetExceeded,
  LengthMismatch,
  IoError,
  UsageError,
};

std::string_view code_name(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the
// code is what the CLI prints and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spirale
