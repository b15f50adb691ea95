#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halfpoint {

/// Domain-level failures. Every error the library reports carries one of
/// these codes so callers (and the CLI) can act on the category rather
/// than parse message text.
enum class Err {
  CharTwo,
  NotPrime,
  ReducibleModulus,
  DivisionByZero,
  NotEnumerable,
  NotDistinct,
  ZeroScale,
  NotTorsionWithinBound,
  HasseViolation,
  InfinityBase,
  NotAHalf,
  BadParameter,
  NoSqrtMinusOne,
  NotOnParameterCurve,
  UnsupportedField,
  ParseError,
};

std::string_view errName(Err e);

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, const std::string& what)
      : std::runtime_error(std::string(errName(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace halfpoint
