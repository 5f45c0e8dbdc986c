#pragma once

#include <cstddef>
#include <span>

#include "barysimplex/matrix.hpp"

namespace barysimplex {

// Strictly positive vector whose entries sum to exactly one.
class StochasticVector {
 public:
  // Throws EmptyVector, NonPositiveEntry or SumNotOne.
  static StochasticVector validate(Vector raw);
  static StochasticVector uniform(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }
  const Vector& vector() const noexcept { return entries_; }

  friend bool operator==(const StochasticVector&, const StochasticVector&) = default;

 private:
  explicit StochasticVector(Vector entries) : entries_(std::move(entries)) {}
  Vector entries_;
};

inline StochasticVector validate_stochastic_vector(Vector raw) {
  return StochasticVector::validate(std::move(raw));
}

// Square, entrywise nonnegative matrix with unit row sums.
class StochasticMatrix {
 public:
  // Throws NotSquare, NegativeEntry or RowSumNotOne.
  static StochasticMatrix validate(Matrix raw);
  static StochasticMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

 private:
  explicit StochasticMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

void require_same_size(const StochasticVector& p, const StochasticVector& q);

}  // namespace barysimplex
