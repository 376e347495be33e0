#include "ualg/errors.hpp"

namespace ualg {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::OddValuation: return "OddValuation";
    case ErrorCode::NonResidue: return "NonResidue";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NoInvolution: return "NoInvolution";
    case ErrorCode::NotQuasiInvertible: return "NotQuasiInvertible";
    case ErrorCode::NotResidueIdempotent: return "NotResidueIdempotent";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BlockDegenerate: return "BlockDegenerate";
    case ErrorCode::NonInvertibleWitness: return "NonInvertibleWitness";
    case ErrorCode::DegenerateCorner: return "DegenerateCorner";
    case ErrorCode::SqrtObstruction: return "SqrtObstruction";
    case ErrorCode::NotSymmetricS: return "NotSymmetricS";
    case ErrorCode::NotBstar: return "NotBstar";
    case ErrorCode::NotTransposeClosed: return "NotTransposeClosed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ualg
