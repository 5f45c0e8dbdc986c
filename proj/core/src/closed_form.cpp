#include "barysimplex/closed_form.hpp"

#include "barysimplex/error.hpp"

namespace barysimplex {
namespace {

Rational positive_gap_total(const StochasticVector& p, const StochasticVector& q) {
  Rational total;
  for (std::size_t k = 0; k < p.size(); ++k) total += pos_part(p[k] - q[k]);
  return total;
}

}  // namespace

IndexPartition index_partition(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  IndexPartition part;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto c = p[i] <=> q[i];
    if (c > 0) {
      part.greater.push_back(i);
    } else if (c < 0) {
      part.less.push_back(i);
    } else {
      part.equal.push_back(i);
    }
  }
  return part;
}

StochasticMatrix build_optimal_primal(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  const Rational total = positive_gap_total(p, q);
  if (total.is_zero()) return StochasticMatrix::identity(n);

  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational shortfall = pos_part(Rational(1) - p[i] / q[i]);
    u(i, i) = Rational(1) - shortfall;
    if (shortfall.is_zero()) continue;
    const Rational scale = shortfall / total;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) u(i, j) = scale * pos_part(p[j] - q[j]);
    }
  }
  return StochasticMatrix::validate(std::move(u));
}

Matrix build_inverse(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  const Rational total = positive_gap_total(p, q);
  if (total.is_zero()) return Matrix::identity(n);

  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational excess = neg_part(Rational(1) - q[i] / p[i]);
    v(i, i) = Rational(1) - excess;
    if (excess.is_zero()) continue;
    const Rational scale = excess / total;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) v(i, j) = scale * pos_part(p[j] - q[j]);
    }
  }
  return v;
}

DualSolution build_dual(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  DualSolution d;
  d.alpha.resize(n);
  d.beta.resize(n);
  d.gamma = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (p[j] < q[j]) d.alpha[j] = q[j].reciprocal();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] >= q[i]) d.beta[i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational g = d.beta[i];
      if (p[j] < q[j]) g += q[i] / q[j];
      if (i == j) g -= 1;
      d.gamma(i, j) = std::move(g);
    }
  }
  d.objective = dot(d.alpha, p.entries()) + sum(d.beta);
  return d;
}

Vector eigenvalues(const StochasticVector& p, const StochasticVector& q, WhichMatrix which) {
  require_same_size(p, q);
  Vector diag(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational ratio = which == WhichMatrix::primal ? p[i] / q[i] : q[i] / p[i];
    diag[i] = which == WhichMatrix::primal ? min(ratio, Rational(1)) : max(ratio, Rational(1));
  }
  return diag;
}

bool characteristic_identity_holds(const Matrix& a, const Vector& diag) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "characteristic identity");
  const std::size_t n = a.rows();
  if (diag.size() != n) throw Error(ErrorCode::DimensionMismatch, "characteristic identity");
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational lambda(static_cast<long>(k));
    Matrix shifted = a;
    Rational product(1);
    for (std::size_t i = 0; i < n; ++i) {
      shifted(i, i) -= lambda;
      product *= diag[i] - lambda;
    }
    if (determinant(shifted) != product) return false;
  }
  return true;
}

ClassificationReport classify(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  const Matrix u = build_optimal_primal(p, q).matrix();
  const Matrix v = build_inverse(p, q);
  const Matrix eye = Matrix::identity(n);

  ClassificationReport r;
  r.inverse_pair = mat_mul(u, v) == eye && mat_mul(v, u) == eye;

  // For n = 1 there are no off-diagonal entries and the maximum stays 0.
  bool seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!seen || v(i, j) > r.max_offdiag_inverse) r.max_offdiag_inverse = v(i, j);
      seen = true;
    }
  }
  r.z_matrix = r.max_offdiag_inverse.sign() <= 0;

  r.det_inverse = determinant(v);
  r.min_entry_primal = u(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.min_entry_primal = min(r.min_entry_primal, u(i, j));

  const bool inverse_nonnegative = r.min_entry_primal.sign() >= 0;
  r.m_matrix = r.z_matrix && !r.det_inverse.is_zero() && r.inverse_pair && inverse_nonnegative;
  r.inverse_m = r.m_matrix;
  return r;
}

UniquenessReport uniqueness(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  UniquenessReport report;
  report.partition = index_partition(p, q);
  const auto& less = report.partition.less;
  const auto& greater = report.partition.greater;
  report.unique = greater.size() <= 1 || less.size() <= 1;
  if (report.unique) return report;

  const Matrix u = build_optimal_primal(p, q).matrix();
  const std::size_t i = less[0], i2 = less[1];
  const std::size_t j = greater[0], j2 = greater[1];

  Matrix dir(p.size(), p.size());
  dir(i, j) = q[i2];
  dir(i, j2) = -q[i2];
  dir(i2, j) = -q[i];
  dir(i2, j2) = q[i];

  Rational step = min(u(i, j2) / q[i2], u(i2, j) / q[i]);
  Matrix alt = u + step * dir;

  report.witness = UniquenessWitness{i, i2, j, j2, std::move(dir), std::move(step),
                                     StochasticMatrix::validate(std::move(alt))};
  return report;
}

}  // namespace barysimplex
