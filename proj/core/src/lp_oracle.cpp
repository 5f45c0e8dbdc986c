#include "barysimplex/lp_oracle.hpp"

#include <optional>
#include <string>

#include "barysimplex/error.hpp"

namespace barysimplex {

std::string_view to_string(LpStatus s) noexcept {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Rows hold [coefficients | rhs]. The cost row holds reduced costs d_j and, in
// its last slot, minus the current objective value. Always minimizes.
class Tableau {
 public:
  Tableau(const StandardFormLp& lp, const Vector& min_cost) : n_(lp.variable_count()), cost_(min_cost) {
    const std::size_t m = lp.constraint_count();
    width_ = n_ + m;
    rows_.assign(m, Vector(width_ + 1));
    basis_.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      const bool flip = lp.rhs[r].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[r][j] = flip ? -lp.constraints(r, j) : lp.constraints(r, j);
      }
      rows_[r][n_ + r] = 1;
      rows_[r][width_] = flip ? -lp.rhs[r] : lp.rhs[r];
      basis_[r] = n_ + r;
    }
  }

  // Returns the optimal phase-1 value (sum of artificials).
  Rational phase_one() {
    const std::size_t m = rows_.size();
    Vector c(width_);
    for (std::size_t r = 0; r < m; ++r) c[n_ + r] = 1;
    load_costs(c);
    entering_limit_ = width_;
    run();
    return -reduced_[width_];
  }

  // Pivots remaining zero-level artificials out of the basis, drops rows that
  // turn out to be linear combinations of others, then deletes artificial columns.
  void purge_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < n_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ && !col; ++j) {
        if (!rows_[r][j].is_zero()) col = j;
      }
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    for (auto& row : rows_) {
      row[n_] = std::move(row[width_]);
      row.resize(n_ + 1);
    }
    width_ = n_;
  }

  // Returns false if the problem is unbounded.
  bool phase_two() {
    load_costs(cost_);
    entering_limit_ = n_;
    return run();
  }

  Rational objective() const { return -reduced_[width_]; }
  std::size_t pivots() const { return pivots_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  Vector values() const {
    Vector x(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][width_];
    }
    return x;
  }

 private:
  void load_costs(const Vector& c) {
    reduced_.assign(width_ + 1, Rational());
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] = c[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (!rows_[r][j].is_zero()) reduced_[j].sub_product(cb, rows_[r][j]);
      }
    }
  }

  bool run() {
    while (true) {
      // Bland: lowest-index improving column, lowest-index basic variable on ties.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < entering_limit_ && !enter; ++j) {
        if (reduced_[j].sign() < 0) enter = j;
      }
      if (!enter) return true;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][*enter];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[r][width_] / a;
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++pivots_;
    Vector& prow = rows_[r];
    const Rational inv = prow[col].reciprocal();
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](Vector& row) {
      if (row[col].is_zero()) return;
      const Rational factor = row[col];
      for (std::size_t j : nz) row[j].sub_product(factor, prow[j]);
    };
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k != r) eliminate(rows_[k]);
    }
    eliminate(reduced_);
    basis_[r] = col;
  }

  std::size_t n_;
  std::size_t width_ = 0;
  std::size_t entering_limit_ = 0;
  Vector cost_;
  std::vector<Vector> rows_;
  Vector reduced_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

void check_well_formed(const StandardFormLp& lp) {
  if (lp.constraints.rows() != lp.constraint_count() ||
      (lp.constraint_count() > 0 && lp.constraints.cols() != lp.variable_count())) {
    throw Error(ErrorCode::MalformedLp,
                "constraint matrix is " + std::to_string(lp.constraints.rows()) + "x" +
                    std::to_string(lp.constraints.cols()) + " but there are " +
                    std::to_string(lp.constraint_count()) + " right-hand sides and " +
                    std::to_string(lp.variable_count()) + " variables");
  }
}

}  // namespace

LpSolution solve(const StandardFormLp& lp) {
  check_well_formed(lp);
  Vector min_cost = lp.objective;
  if (lp.sense == Sense::maximize) {
    for (auto& c : min_cost) c = -c;
  }
  min_cost.resize(lp.variable_count() + lp.constraint_count());

  Tableau t(lp, min_cost);
  LpSolution s;
  s.phase_one_value = t.phase_one();
  if (!s.phase_one_value.is_zero()) {
    s.status = LpStatus::infeasible;
    s.pivots = t.pivots();
    return s;
  }
  t.purge_artificials();
  const bool bounded = t.phase_two();
  s.pivots = t.pivots();
  s.basis = t.basis();
  if (!bounded) {
    s.status = LpStatus::unbounded;
    return s;
  }
  s.status = LpStatus::optimal;
  s.values = t.values();
  s.value = lp.sense == Sense::maximize ? -t.objective() : t.objective();
  return s;
}

StandardFormLp encode_primal(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  StandardFormLp lp;
  lp.sense = Sense::maximize;
  lp.objective.assign(n * n, Rational());
  for (std::size_t i = 0; i < n; ++i) lp.objective[i * n + i] = 1;
  lp.constraints = Matrix(2 * n, n * n);
  lp.rhs.assign(2 * n, Rational());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.constraints(i, i * n + j) = 1;
    lp.rhs[i] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) lp.constraints(n + j, i * n + j) = q[i];
    lp.rhs[n + j] = p[j];
  }
  return lp;
}

Matrix primal_matrix(const LpSolution& solution, std::size_t n) {
  if (solution.values.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "solution does not hold n*n values");
  }
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = solution.values[i * n + j];
  return u;
}

StandardFormLp encode_dual(const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  const std::size_t alpha_pos = 0, alpha_neg = n, beta_pos = 2 * n, beta_neg = 3 * n, gamma = 4 * n;
  StandardFormLp lp;
  lp.sense = Sense::minimize;
  lp.objective.assign(gamma + n * n, Rational());
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective[alpha_pos + j] = p[j];
    lp.objective[alpha_neg + j] = -p[j];
    lp.objective[beta_pos + j] = 1;
    lp.objective[beta_neg + j] = -1;
  }
  lp.constraints = Matrix(n * n, lp.objective.size());
  lp.rhs.assign(n * n, Rational());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = i * n + j;
      lp.constraints(r, alpha_pos + j) = q[i];
      lp.constraints(r, alpha_neg + j) = -q[i];
      lp.constraints(r, beta_pos + i) = 1;
      lp.constraints(r, beta_neg + i) = -1;
      lp.constraints(r, gamma + r) = -1;
      if (i == j) lp.rhs[r] = 1;
    }
  }
  return lp;
}

LpSolution solve_dual(const StochasticVector& p, const StochasticVector& q) {
  return solve(encode_dual(p, q));
}

DualSolution decode_dual(const LpSolution& solution, const StochasticVector& p,
                         const StochasticVector& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  if (solution.values.size() != 4 * n + n * n) {
    throw Error(ErrorCode::DimensionMismatch, "not a solve_dual solution for this n");
  }
  const auto& x = solution.values;
  DualSolution d;
  d.alpha.resize(n);
  d.beta.resize(n);
  d.gamma = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    d.alpha[j] = x[j] - x[n + j];
    d.beta[j] = x[2 * n + j] - x[3 * n + j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.gamma(i, j) = x[4 * n + i * n + j];
  d.objective = dot(d.alpha, p.entries()) + sum(d.beta);
  return d;
}

}  // namespace barysimplex
