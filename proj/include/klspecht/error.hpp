#pragma once

#include <stdexcept>
#include <string>

namespace klspecht {

enum class ErrorKind {
  InvalidMatrix,
  InfiniteOrTooLarge,
  MixedGroups,
  NotInDJ,
  NotInEJ,
  NotInCosetSet,
  NotInDJbar,
  TooLarge,
  RecursionStuck,
  NotCellClosed,
  NotRowStandard,
  SizeMismatch,
  InvalidArgument,
  CacheMismatch,
  Internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::InfiniteOrTooLarge: return "InfiniteOrTooLarge";
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::NotInDJ: return "NotInDJ";
    case ErrorKind::NotInEJ: return "NotInEJ";
    case ErrorKind::NotInCosetSet: return "NotInCosetSet";
    case ErrorKind::NotInDJbar: return "NotInDJbar";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RecursionStuck: return "RecursionStuck";
    case ErrorKind::NotCellClosed: return "NotCellClosed";
    case ErrorKind::NotRowStandard: return "NotRowStandard";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CacheMismatch: return "CacheMismatch";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace klspecht
