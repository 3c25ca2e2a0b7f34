#pragma once

#include <stdexcept>
#include <string>

namespace biflow {

enum class ErrorCode {
  SelfLoop,
  NegativeCapacity,
  BadTerminals,
  OverlappingCutSides,
  ValueInfeasible,
  NotAFlow,
  NotCrossing,
  NotSeymourLike,
  TooLarge,
  ParseError,
  Internal,
};

// All library failures surface as this exception; code() distinguishes
// recoverable structural outcomes (NotCrossing, NotSeymourLike) from bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

constexpr const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NegativeCapacity: return "NegativeCapacity";
    case ErrorCode::BadTerminals: return "BadTerminals";
    case ErrorCode::OverlappingCutSides: return "OverlappingCutSides";
    case ErrorCode::ValueInfeasible: return "ValueInfeasible";
    case ErrorCode::NotAFlow: return "NotAFlow";
    case ErrorCode::NotCrossing: return "NotCrossing";
    case ErrorCode::NotSeymourLike: return "NotSeymourLike";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode c, const std::string& m) {
  throw Error(c, m);
}

inline void require(bool ok, ErrorCode c, const std::string& m) {
  if (!ok) fail(c, m);
}

}  // namespace biflow
