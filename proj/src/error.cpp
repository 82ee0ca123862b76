#include "realsurf/error.hpp"

namespace realsurf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::EmptyManifold: return "EmptyManifold";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NonRationalRoot: return "NonRationalRoot";
    case ErrorCode::RealBlowupOnEmptyLocus: return "RealBlowupOnEmptyLocus";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::DegenerateWitness: return "DegenerateWitness";
    case ErrorCode::SingularRestriction: return "SingularRestriction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::SchemaError;
}

}  // namespace realsurf
