#include "ctc/error.hpp"

namespace ctc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidPlayer: return "InvalidPlayer";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidSeeding: return "InvalidSeeding";
    case ErrorCode::InvalidCaterpillar: return "InvalidCaterpillar";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotADag: return "NotADag";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonBinaryPopularity: return "NonBinaryPopularity";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoAlgorithm: return "NoAlgorithm";
    case ErrorCode::InvalidTriples: return "InvalidTriples";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidSolution: return "InvalidSolution";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Unknown";
}

}  // namespace ctc
