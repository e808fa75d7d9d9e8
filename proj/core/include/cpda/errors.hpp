#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpda {

// Machine-readable error codes. CLI and tests dispatch on these, never on
// message prose.
enum class ErrorCode {
  MalformedArray,
  ParamOutOfRange,
  NotResolvable,
  InternalFlowFailure,
  NotMember,
  ShapeMismatch,
  DegenerateParams,
  DivisibilityError,
  MissingPacket,
  CacheMiss,
  OffGrid,
  OffRegion,
  LabelMismatch,
  EmptyIntersection,
  ConstructionInvalid,
  ParseError,
  IoError,
  UsageError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedArray: return "MalformedArray";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::NotResolvable: return "NotResolvable";
    case ErrorCode::InternalFlowFailure: return "InternalFlowFailure";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::DivisibilityError: return "DivisibilityError";
    case ErrorCode::MissingPacket: return "MissingPacket";
    case ErrorCode::CacheMiss: return "CacheMiss";
    case ErrorCode::OffGrid: return "OffGrid";
    case ErrorCode::OffRegion: return "OffRegion";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

class CpdaError : public std::runtime_error {
 public:
  CpdaError(ErrorCode code, std::string message, std::string context = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message +
                           (context.empty() ? "" : " [" + context + "]")),
        code_(code),
        message_(std::move(message)),
        context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string context_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message,
                              std::string context = {}) {
  throw CpdaError(code, std::move(message), std::move(context));
}

inline void require(bool cond, ErrorCode code, std::string message,
                    std::string context = {}) {
  if (!cond) fail(code, std::move(message), std::move(context));
}

}  // namespace cpda
