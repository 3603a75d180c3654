#ifndef QRAD_ERRORS_HPP
#define QRAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrad {

enum class ErrorCode {
  NonPositiveOmega,
  NegativeCoupling,
  NonFinite,
  UnresolvedFrequency,
  PoleAtResonance,
  DegenerateMode,
  ZeroFrequencyMode,
  DivergentYield,
  QuadratureNotConverged,
  StepSizeUnderflow,
  NonFiniteState,
  UnconvergedKappaGrid,
  CFLViolation,
  ReflectionDetected,
  NoPeaksFound,
  SchemaViolation,
  IOError,
};

const char* error_code_name(ErrorCode c);

/// Exception carrying a machine-readable error code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPositiveOmega: return "NonPositiveOmega";
    case ErrorCode::NegativeCoupling: return "NegativeCoupling";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::UnresolvedFrequency: return "UnresolvedFrequency";
    case ErrorCode::PoleAtResonance: return "PoleAtResonance";
    case ErrorCode::DegenerateMode: return "DegenerateMode";
    case ErrorCode::ZeroFrequencyMode: return "ZeroFrequencyMode";
    case ErrorCode::DivergentYield: return "DivergentYield";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::UnconvergedKappaGrid: return "UnconvergedKappaGrid";
    case ErrorCode::CFLViolation: return "CFLViolation";
    case ErrorCode::ReflectionDetected: return "ReflectionDetected";
    case ErrorCode::NoPeaksFound: return "NoPeaksFound";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::IOError: return "IOError";
  }
  return "UnknownError";
}

}  // namespace qrad

#endif  // QRAD_ERRORS_HPP
