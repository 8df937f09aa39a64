#pragma once

#include <stdexcept>
#include <string>

namespace lt {

enum class Errc {
  InvalidArgument,
  Parse,
  InfiniteCokernel,
  CoordinateOutOfRange,
  DivisionByZero,
  IncompatibleLevel,
  LevelTooLarge,
  UnsupportedName,
  GroupTooLarge,
  NotClosed,
  ShapeMismatch,
  NoLift,
  DatumMismatch,
  WeightCountMismatch,
  InfiniteFixedPoints,
  TorusMismatch,
  NotIntertwining,
  GuardViolation,
  ContextMismatch,
  InvalidMorphism,
  UnsupportedGroup,
  NoOrderFormula,
  TooLarge,
  MissingTable,
  ValidationFailed,
  TrivialAdditiveCharacter,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace lt
