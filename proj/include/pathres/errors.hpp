#pragma once

#include <stdexcept>
#include <string>

namespace pathres {

enum class ErrorCode {
  DivisionByZero,
  MixedFields,
  ParseError,
  NotParallel,
  ZeroPoly,
  InvalidRule,
  FuelExhausted,
  CapExceeded,
  UnknownRule,
  TraceMismatch,
  OrderViolation,
  DiamondUnverified,
  DegreeMismatch,
  ComplexViolation,
  InfiniteChains,
  BetaZero,
  NotQuadratic,
  UnknownExample,
  BadParams,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathres
