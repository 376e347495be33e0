#pragma once

#include <stdexcept>
#include <string>

namespace ualg {

/// Machine-readable failure categories. Each maps to a distinct CLI exit
/// code family (see analysis.hpp).
enum class ErrorCode {
  DivisionByZero,
  PrecisionExhausted,
  OddValuation,
  NonResidue,
  NotAssociative,
  BadDimension,
  NoInvolution,
  NotQuasiInvertible,
  NotResidueIdempotent,
  NotSemisimple,
  NotSimple,
  BlockDegenerate,
  NonInvertibleWitness,
  DegenerateCorner,
  SqrtObstruction,
  NotSymmetricS,
  NotBstar,
  NotTransposeClosed,
  ParseError,
  ValidationError,
  BudgetExceeded,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code),
        detail_(msg) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ualg
