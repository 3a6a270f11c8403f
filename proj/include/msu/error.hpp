#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msu {

enum class ErrorCode {
  InvalidInput,
  InvalidSpace,
  IndexOutOfRange,
  InvalidTriple,
  WrongCardinality,
  DisconnectedGraph,
  NotUltrametric,
  ResultNotUltrametric,
  R0TooSmall,
  EpsilonTooSmall,
  BadSeparators,
  NotPseudolinear,
  IsometricDuplicate,
  DuplicatePoint,
  DegenerateTriangle,
  OriginNotAllowed,
  AlphaOutOfRange,
  NonpositiveDistance,
  LengthOutOfRange,
  EmptyFamily,
  NotTransitive,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace msu
