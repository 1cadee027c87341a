#pragma once

#include <stdexcept>
#include <string>

namespace applf {

enum class ErrorCode {
  NotAnOddPrime,
  ZeroHasNoLog,
  OrderDoesNotDivide,
  FieldMismatch,
  ZeroNormalizer,
  DomainError,
  PreconditionViolated,
  BadPrime,
  NonIntegerResult,
  PoleInC,
  BadDenominator,
  NotConvergent,
  DegenerateDenominator,
  IncompatiblePrime,
  UnknownIdentity,
  EmptyRange,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace applf
