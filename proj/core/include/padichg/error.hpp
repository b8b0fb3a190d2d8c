#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padichg {

/// Failure categories surfaced by the math layer. The CLI reports these by
/// name, so the spelling of `to_string` is part of the external interface.
enum class Errc {
  NotPrime,
  DegreeTooLarge,
  SingularCurve,
  DenominatorDivisibleByP,
  ZeroInput,
  ZeroArgument,
  NonUnitInverse,
  NonConstantResult,
  PrecisionUnderflow,
  NoRepresentative,
  HypothesisViolation,
  FieldTooLarge,
  ContextMismatch,
  Overflow,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::NonUnitInverse: return "NonUnitInverse";
    case Errc::NonConstantResult: return "NonConstantResult";
    case Errc::PrecisionUnderflow: return "PrecisionUnderflow";
    case Errc::NoRepresentative: return "NoRepresentative";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw MathError(code, detail); }

inline void require(bool condition, Errc code, const std::string& detail) {
  if (!condition) fail(code, detail);
}

}  // namespace padichg
