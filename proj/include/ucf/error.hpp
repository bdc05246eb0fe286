#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucf {

enum class ErrorCode {
  EmptyFamily,
  NotAMember,
  NotUnionClosed,
  NotSeparating,
  BaseNotFull,
  DegenerateHeight,
  TooSmall,
  ZeroDenominator,
  EmptyRegion,
  BadK,
  BadM,
  BadN,
  BranchGap,
  NTooLarge,
  UnknownTheorem,
  ParseError,
  OutOfRange,
  DuplicateMember,
  Overflow,
  CertificateFailed,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotUnionClosed: return "NotUnionClosed";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::BaseNotFull: return "BaseNotFull";
    case ErrorCode::DegenerateHeight: return "DegenerateHeight";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BranchGap: return "BranchGap";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ucf
