#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctc {

enum class ErrorCode {
  MissingEdge,
  DuplicateEdge,
  SelfLoop,
  InvalidPlayer,
  EmptySubset,
  InvalidSeeding,
  InvalidCaterpillar,
  DimensionMismatch,
  InvalidValue,
  Overflow,
  OutOfRange,
  NotADag,
  LengthMismatch,
  NonBinaryPopularity,
  TooLarge,
  NoAlgorithm,
  InvalidTriples,
  InvalidGraph,
  InvalidSolution,
  SchemaError,
  BadParams,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ctc
