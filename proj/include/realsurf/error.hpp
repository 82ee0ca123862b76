#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realsurf {

// Machine-readable failure codes. The CLI maps these onto JSON error codes and
// process exit statuses.
enum class ErrorCode {
  ZeroPolynomial,
  ZeroFunction,
  DegenerateTriple,
  EmptyManifold,
  BadIndex,
  NonRationalRoot,
  RealBlowupOnEmptyLocus,
  BadRank,
  OutOfRange,
  LengthMismatch,
  NotAWitness,
  DegenerateWitness,
  SingularRestriction,
  InvalidArgument,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// True for errors caused by malformed input documents rather than by the
// mathematics of a well-formed request.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace realsurf
