#pragma once

#include <stdexcept>
#include <string>

namespace lmds {

enum class ErrorCode {
  NotAnchored,
  NotOneSided,
  TooLarge,
  NotDisjoint,
  DegeneratePosition,
  NotTwoLineCrossing,
  DegenerateOrder,
  MixedFrameTypes,
  InvalidDrawing,
  SourceTooLarge,
  ParseError,
  ValidationError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAnchored: return "NotAnchored";
    case ErrorCode::NotOneSided: return "NotOneSided";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::DegeneratePosition: return "DegeneratePosition";
    case ErrorCode::NotTwoLineCrossing: return "NotTwoLineCrossing";
    case ErrorCode::DegenerateOrder: return "DegenerateOrder";
    case ErrorCode::MixedFrameTypes: return "MixedFrameTypes";
    case ErrorCode::InvalidDrawing: return "InvalidDrawing";
    case ErrorCode::SourceTooLarge: return "SourceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lmds
