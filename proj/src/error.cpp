#include "spirale/error.hpp"

namespace spirale {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::AlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::NotInAlphabet: return "NotInAlphabet";
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::KeyLengthMismatch: return "KeyLengthMismatch";
    case ErrorCode::InvalidLag: return "InvalidLag";
    case ErrorCode::BadSeedLength: return "BadSeedLength";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::EmptyMessage: return "EmptyMessage";
    case ErrorCode::ResultEmpty: return "ResultEmpty";
    case ErrorCode::BadExtractLength: return "BadExtractLength";
    case ErrorCode::SetSizeMismatch: return "SetSizeMismatch";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BadLag: return "BadLag";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace spirale
