#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plstab {

enum class ErrorCode {
  Parse,
  Io,
  InvalidComplex,
  InvalidMap,
  UnknownVertex,
  RealizationMismatch,
  NonCoplanarOverlap,
  PointOutsideComplex,
  NondegenerateViolation,
  OutOfInterval,
  NotFixedPoint,
  SideOutsideInterval,
  OrientationReversing,
  SupportMismatch,
  FixIsEverything,
  FixIsEmpty,
  DisconnectedComplex,
  VertexNotInComplex,
  DivisionByZero,
  Unsupported,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace plstab
