#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barysimplex {

enum class ErrorCode {
  EmptyVector,
  NonPositiveEntry,
  SumNotOne,
  NegativeEntry,
  RowSumNotOne,
  DimensionMismatch,
  NotSquare,
  MalformedLp,
  BadWeights,
  UnsortedGrid,
  InvalidArgument,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every recoverable failure in the library surfaces as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace barysimplex
