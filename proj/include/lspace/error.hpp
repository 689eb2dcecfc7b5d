#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lspace {

enum class ErrorCode {
  NotDivisible,
  NotCoprime,
  NotLSpaceShape,
  InvalidShape,
  SyntaxError,
  ConstraintError,
  HypothesisViolated,
  InfiniteComplement,
  NotSymmetric,
  NotIteratedTorus,
  NotLSpace,
  Undefined,
  OutOfDomain,
  DomainError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotLSpaceShape: return "NotLSpaceShape";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ConstraintError: return "ConstraintError";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InfiniteComplement: return "InfiniteComplement";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotIteratedTorus: return "NotIteratedTorus";
    case ErrorCode::NotLSpace: return "NotLSpace";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// code is stable and machine-readable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::SyntaxError, message), offset_(offset) {}

  /// Byte offset into the input where parsing stopped.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace lspace
