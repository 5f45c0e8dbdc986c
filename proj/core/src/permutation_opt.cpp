#include "barysimplex/permutation_opt.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "barysimplex/closed_form.hpp"
#include "barysimplex/error.hpp"
#include "barysimplex/kkt.hpp"

namespace barysimplex {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::from_mapping(std::vector<std::size_t> mapping) {
  std::vector<bool> hit(mapping.size(), false);
  for (std::size_t x : mapping) {
    if (x >= mapping.size() || hit[x]) {
      throw Error(ErrorCode::InvalidArgument, "mapping is not a permutation of 0.." +
                                                  std::to_string(mapping.size()) + "-1");
    }
    hit[x] = true;
  }
  return Permutation(std::move(mapping));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Matrix Permutation::matrix() const {
  Matrix m(map_.size(), map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) m(i, map_[i]) = 1;
  return m;
}

Matrix assignment_costs(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = min(p[j] / q[i], Rational(1));
  return c;
}

namespace {

// Kuhn's augmenting path on the tight-edge graph restricted to free columns.
bool augment(std::size_t row, const std::vector<std::vector<bool>>& tight,
             const std::vector<bool>& blocked, std::vector<bool>& seen,
             std::vector<std::optional<std::size_t>>& owner) {
  for (std::size_t j = 0; j < tight.size(); ++j) {
    if (!tight[row][j] || blocked[j] || seen[j]) continue;
    seen[j] = true;
    if (!owner[j] || augment(*owner[j], tight, blocked, seen, owner)) {
      owner[j] = row;
      return true;
    }
  }
  return false;
}

bool rows_matchable(std::size_t first_row, const std::vector<std::vector<bool>>& tight,
                    const std::vector<bool>& blocked) {
  const std::size_t n = tight.size();
  std::vector<std::optional<std::size_t>> owner(n);
  for (std::size_t r = first_row; r < n; ++r) {
    std::vector<bool> seen(n, false);
    if (!augment(r, tight, blocked, seen, owner)) return false;
  }
  return true;
}

}  // namespace

Permutation solve_assignment(const Matrix& costs) {
  if (!costs.is_square()) throw Error(ErrorCode::NotSquare, "assignment costs");
  const std::size_t n = costs.rows();
  if (n == 0) return Permutation::identity(0);

  // Minimize a_ij = -c_ij. Arrays are 1-based with column 0 as the virtual root.
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  auto a = [&](std::size_t i, std::size_t j) { return -costs(i - 1, j - 1); };

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = a(i0, j) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  // With optimal potentials, a permutation is optimal iff it only uses edges
  // with zero reduced cost.
  std::vector<std::vector<bool>> tight(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tight[i][j] = (a(i + 1, j + 1) - u[i + 1] - v[j + 1]).is_zero();

  std::vector<std::size_t> sigma(n);
  std::vector<bool> blocked(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t j = 0; j < n && !placed; ++j) {
      if (!tight[i][j] || blocked[j]) continue;
      blocked[j] = true;
      if (rows_matchable(i + 1, tight, blocked)) {
        sigma[i] = j;
        placed = true;
      } else {
        blocked[j] = false;
      }
    }
    if (!placed) throw Error(ErrorCode::Internal, "no tight perfect matching");
  }
  return Permutation::from_mapping(std::move(sigma));
}

Rational assignment_value(const Matrix& costs, const Permutation& sigma) {
  if (!costs.is_square() || costs.rows() != sigma.size()) {
    throw Error(ErrorCode::DimensionMismatch, "assignment_value");
  }
  Rational total;
  for (std::size_t i = 0; i < sigma.size(); ++i) total += costs(i, sigma[i]);
  return total;
}

namespace {

StochasticVector permuted_weights(const StochasticVector& q, const Permutation& m) {
  Vector mq(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) mq[i] = q[m[i]];
  return StochasticVector::validate(std::move(mq));
}

}  // namespace

Rational permuted_trace(const StochasticVector& p, const StochasticVector& q, const Permutation& m) {
  require_same_size(p, q);
  if (m.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "permutation size");
  return trace(build_optimal_primal(p, permuted_weights(q, m)).matrix());
}

Rational brute_force_perm_trace(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  std::vector<std::size_t> m(p.size());
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::optional<Rational> best;
  do {
    Rational t = permuted_trace(p, q, Permutation::from_mapping(m));
    if (!best || t > *best) best = std::move(t);
  } while (std::next_permutation(m.begin(), m.end()));
  return *best;
}

PermOptResult solve_p_perm(const StochasticVector& p, const StochasticVector& q,
                           const PermOptions& options) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  const Matrix costs = assignment_costs(p, q);
  const Permutation assignment = solve_assignment(costs);
  const Rational optimum = assignment_value(costs, assignment);

  Permutation m_hat = assignment.inverse();
  if (options.permutation) {
    if (options.permutation->size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "preferred permutation size");
    }
    if (permuted_trace(p, q, *options.permutation) != optimum) {
      throw Error(ErrorCode::InvalidArgument, "preferred permutation is not optimal");
    }
    m_hat = *options.permutation;
  }

  const StochasticVector mq = permuted_weights(q, m_hat);
  Matrix w = build_optimal_primal(p, mq).matrix();
  if (options.vertex == FaceVertex::witness) {
    if (auto report = uniqueness(p, mq); report.witness) w = report.witness->alternate.matrix();
  }
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(m_hat[i], j) = w(i, j);

  PermOptResult r{m_hat, StochasticMatrix::validate(std::move(u)), {}, {}, {}, {}};
  r.trace_perm = trace(mat_mul(r.m_hat.matrix(), r.u_hat.matrix()));
  const StochasticMatrix base = build_optimal_primal(p, q);
  r.trace_base = trace(base.matrix());
  r.absdet_perm = determinant(r.u_hat.matrix()).abs();
  r.absdet_base = determinant(base.matrix()).abs();

  if (!is_member(r.u_hat, p, q)) throw Error(ErrorCode::Internal, "assembled matrix left the feasible set");
  if (r.trace_perm != optimum) {
    throw Error(ErrorCode::Internal, "tr(MU) = " + r.trace_perm.str() + " but assignment optimum is " +
                                         optimum.str());
  }
  if (n <= 6 && brute_force_perm_trace(p, q) != optimum) {
    throw Error(ErrorCode::Internal, "assignment optimum disagrees with permutation scan");
  }
  return r;
}

std::vector<Vector> simplex_vertices(const StochasticMatrix& u) {
  std::vector<Vector> vertices;
  vertices.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto row = u.matrix().row(i);
    vertices.emplace_back(row.begin(), row.end());
  }
  return vertices;
}

}  // namespace barysimplex
