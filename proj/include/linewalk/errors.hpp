#pragma once

#include <stdexcept>
#include <string>

namespace linewalk {

// Every domain failure carries one of these codes. The C API exposes the
// same set as lw_status values, so the list must stay in sync with
// include/linewalk.h.
enum class ErrorCode {
  Ok = 0,
  ParseError,
  VertexOutOfRange,
  NonBinaryMatrix,
  NotSquare,
  NotEulerian,
  NotAcyclic,
  NotRegular,
  NotSpanning,
  NotSubdigraph,
  NotLineDigraph,
  NotUnitary,
  EmptyArcSet,
  SizeLimitExceeded,
  LoopsPresent,
  TooLarge,
  InvalidPartition,
  ExponentNegative,
  PenroseViolation,
  BadDimension,
  DimensionMismatch,
  BadGenerators,
  BadOrder,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The description without the code-name prefix that what() carries.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace linewalk
