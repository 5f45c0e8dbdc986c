#include "barysimplex/error.hpp"

namespace barysimplex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::RowSumNotOne: return "RowSumNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::MalformedLp: return "MalformedLp";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace barysimplex
