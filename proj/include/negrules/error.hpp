#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negrules {

enum class ErrorCode {
  EmptyDatabase,
  UnknownItem,
  OverlappingItemsets,
  EmptyItemset,
  DivisionUndefined,
  DegenerateAntecedent,
  InvalidThreshold,
  TooSmall,
  UniverseTooLarge,
  InvalidParameter,
  MalformedReport,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyDatabase: return "EmptyDatabase";
    case ErrorCode::UnknownItem: return "UnknownItem";
    case ErrorCode::OverlappingItemsets: return "OverlappingItemsets";
    case ErrorCode::EmptyItemset: return "EmptyItemset";
    case ErrorCode::DivisionUndefined: return "DivisionUndefined";
    case ErrorCode::DegenerateAntecedent: return "DegenerateAntecedent";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MalformedReport: return "MalformedReport";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure the library reports. The message is prefixed with the code
/// name so CLI diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace negrules
