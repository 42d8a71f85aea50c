#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epg {

enum class ErrorCode {
  EmptyOrDegenerate,
  Diagonal,
  SelfIntersecting,
  InvalidGraph,
  DomainMismatch,
  SameOwner,
  IntersectingInput,
  TooManyBends,
  RangeError,
  UnsupportedM,
  ConflictError,
  NotB1,
  BudgetError,
  TooLarge,
  ParseError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyOrDegenerate: return "EmptyOrDegenerate";
    case ErrorCode::Diagonal: return "Diagonal";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::SameOwner: return "SameOwner";
    case ErrorCode::IntersectingInput: return "IntersectingInput";
    case ErrorCode::TooManyBends: return "TooManyBends";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::UnsupportedM: return "UnsupportedM";
    case ErrorCode::ConflictError: return "ConflictError";
    case ErrorCode::NotB1: return "NotB1";
    case ErrorCode::BudgetError: return "BudgetError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace epg
