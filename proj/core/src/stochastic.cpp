#include "barysimplex/stochastic.hpp"

#include <string>

#include "barysimplex/error.hpp"

namespace barysimplex {

StochasticVector StochasticVector::validate(Vector raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyVector, "stochastic vector has no entries");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].sign() <= 0) {
      throw Error(ErrorCode::NonPositiveEntry,
                  "entry " + std::to_string(i + 1) + " is " + raw[i].str());
    }
  }
  const Rational total = sum(raw);
  if (total != Rational(1)) throw Error(ErrorCode::SumNotOne, "entries sum to " + total.str());
  return StochasticVector(std::move(raw));
}

StochasticVector StochasticVector::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyVector, "uniform vector of size 0");
  return StochasticVector(Vector(n, Rational(1, static_cast<long>(n))));
}

StochasticMatrix StochasticMatrix::validate(Matrix raw) {
  if (!raw.is_square()) throw Error(ErrorCode::NotSquare, "stochastic matrix must be square");
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      if (raw(i, j).sign() < 0) {
        throw Error(ErrorCode::NegativeEntry, "entry (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ") is " +
                                                  raw(i, j).str());
      }
    }
    const Rational s = sum(raw.row(i));
    if (s != Rational(1)) {
      throw Error(ErrorCode::RowSumNotOne, "row " + std::to_string(i + 1) + " sums to " + s.str());
    }
  }
  return StochasticMatrix(std::move(raw));
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  return StochasticMatrix(Matrix::identity(n));
}

void require_same_size(const StochasticVector& p, const StochasticVector& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "p has " + std::to_string(p.size()) +
                                                  " entries, q has " + std::to_string(q.size()));
  }
}

}  // namespace barysimplex
