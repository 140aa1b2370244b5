#include "pathres/errors.hpp"

namespace pathres {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::ZeroPoly: return "ZeroPoly";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::DiamondUnverified: return "DiamondUnverified";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ComplexViolation: return "ComplexViolation";
    case ErrorCode::InfiniteChains: return "InfiniteChains";
    case ErrorCode::BetaZero: return "BetaZero";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Error";
}

}  // namespace pathres
