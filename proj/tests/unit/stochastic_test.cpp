#include "barysimplex/stochastic.hpp"

#include <gtest/gtest.h>

#include "barysimplex/error.hpp"
#include "support/fixtures.hpp"

namespace barysimplex {
namespace {

using testing::mat;
using testing::vec;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(StochasticVector, AcceptsExactSimplexPoints) {
  const auto p = StochasticVector::validate(vec({"3/10", "2/5", "1/10", "1/5"}));
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p[1], Rational(2, 5));
  EXPECT_EQ(StochasticVector::uniform(3)[2], Rational(1, 3));
}

TEST(StochasticVector, RejectsInvalidInput) {
  EXPECT_EQ(code_of([] { StochasticVector::validate({}); }), ErrorCode::EmptyVector);
  EXPECT_EQ(code_of([] { StochasticVector::validate(vec({"1/2", "1/2", "0"})); }),
            ErrorCode::NonPositiveEntry);
  EXPECT_EQ(code_of([] { StochasticVector::validate(vec({"3/2", "-1/2"})); }),
            ErrorCode::NonPositiveEntry);
  EXPECT_EQ(code_of([] { StochasticVector::validate(vec({"1/3", "1/3", "1/4"})); }),
            ErrorCode::SumNotOne);
  EXPECT_NO_THROW(StochasticVector::validate(vec({"0.333333", "0.333333", "0.333334"})));
  EXPECT_EQ(code_of([] { StochasticVector::validate(vec({"0.333333", "0.333333", "0.333333"})); }),
            ErrorCode::SumNotOne);
}

TEST(StochasticMatrix, Validation) {
  EXPECT_NO_THROW(StochasticMatrix::validate(mat({{"1/2", "1/2"}, {"0", "1"}})));
  EXPECT_EQ(code_of([] { StochasticMatrix::validate(Matrix(2, 3)); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([] { StochasticMatrix::validate(mat({{"3/2", "-1/2"}, {"0", "1"}})); }),
            ErrorCode::NegativeEntry);
  EXPECT_EQ(code_of([] { StochasticMatrix::validate(mat({{"1/2", "1/3"}, {"0", "1"}})); }),
            ErrorCode::RowSumNotOne);
  EXPECT_EQ(StochasticMatrix::identity(3).matrix(), Matrix::identity(3));
}

TEST(StochasticVector, SizeMismatch) {
  const auto a = StochasticVector::uniform(2);
  const auto b = StochasticVector::uniform(3);
  EXPECT_EQ(code_of([&] { require_same_size(a, b); }), ErrorCode::DimensionMismatch);
}

}  // namespace
}  // namespace barysimplex
