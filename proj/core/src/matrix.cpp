#include "barysimplex/matrix.hpp"

#include <algorithm>
#include <utility>

#include "barysimplex/error.hpp"

namespace barysimplex {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vector Matrix::diagonal() const {
  const std::size_t n = std::min(rows_, cols_);
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "mat_mul: " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " times " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vector mat_vec(const Matrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "mat_vec");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

namespace {

template <typename Op>
Matrix elementwise(const Matrix& a, const Matrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "elementwise shape mismatch");
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = op(a(i, j), b(i, j));
  return c;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Matrix outer(std::span<const Rational> a, std::span<const Rational> b) {
  Matrix c(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c(i, j) = a[i] * b[j];
  return c;
}

Rational trace(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "trace");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "determinant");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row: det(A) = det(D A) / prod(d_i).
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a(i, j).raw();
      m[i][j] = v.get_num() * (l / v.get_den());
    }
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  mpq_class det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return Rational(std::move(det));
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Rational sum(std::span<const Rational> a) {
  Rational s;
  for (const auto& x : a) s += x;
  return s;
}

std::vector<double> to_doubles(std::span<const Rational> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

std::vector<std::vector<double>> to_doubles(const Matrix& a) {
  std::vector<std::vector<double>> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = to_doubles(a.row(i));
  return out;
}

}  // namespace barysimplex
