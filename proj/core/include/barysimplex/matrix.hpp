#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "barysimplex/rational.hpp"

namespace barysimplex {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. No sign or row-sum constraints.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;
  Vector diagonal() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix transpose(const Matrix& a);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, std::span<const Rational> x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

// Outer product a bᵀ.
Matrix outer(std::span<const Rational> a, std::span<const Rational> b);

Rational trace(const Matrix& a);

// Exact determinant. Rows are scaled to integers and reduced with Bareiss'
// fraction-free elimination, so every intermediate is an exact integer.
Rational determinant(const Matrix& a);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational sum(std::span<const Rational> a);

std::vector<double> to_doubles(std::span<const Rational> v);
std::vector<std::vector<double>> to_doubles(const Matrix& a);

}  // namespace barysimplex
