#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinc {

enum class ErrorCode {
  InvalidInput,       // malformed files, bad vertex lists
  NotSimplicial,      // a vertex map does not send simplices to simplices
  NotSubcomplex,
  OutOfRange,
  NotCocycle,
  SpaceMismatch,
  NotClosed,
  NotOrientable,
  DegeneratePairing,
  TwoTorsion,
  NotDivisible,
  EmptyTorsor,
  NotInImage,
  HypothesisFailed,
  IncompatibleLifts,
  ConsistencyFailure,
  Internal,
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

}  // namespace spinc
