#include "barysimplex/kkt.hpp"

#include "barysimplex/error.hpp"

namespace barysimplex {

std::string_view to_string(KktCondition c) noexcept {
  switch (c) {
    case KktCondition::Stationarity: return "stationarity";
    case KktCondition::Barycenter: return "barycenter";
    case KktCondition::RowSum: return "row_sum";
    case KktCondition::PrimalNonnegativity: return "primal_nonnegativity";
    case KktCondition::DualNonnegativity: return "dual_nonnegativity";
    case KktCondition::ComplementarySlackness: return "complementary_slackness";
    case KktCondition::StrongDuality: return "strong_duality";
  }
  return "unknown";
}

namespace {

void check_shapes(const Matrix& u, const StochasticVector& p, const StochasticVector& q) {
  require_same_size(p, q);
  if (!u.is_square() || u.rows() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(u.rows()) + "x" +
                                                  std::to_string(u.cols()) + ", vectors have " +
                                                  std::to_string(p.size()) + " entries");
  }
}

struct PrimalFlags {
  bool barycenter = true;
  bool row_sums = true;
  bool nonnegative = true;
};

// Appends barycenter, row-sum and sign violations to `out` when it is non-null.
PrimalFlags check_primal(const Matrix& u, const StochasticVector& p, const StochasticVector& q,
                         std::vector<KktViolation>* out) {
  const std::size_t n = p.size();
  PrimalFlags f;
  for (std::size_t j = 0; j < n; ++j) {
    Rational r = -p[j];
    for (std::size_t i = 0; i < n; ++i) r += q[i] * u(i, j);
    if (!r.is_zero()) {
      f.barycenter = false;
      if (out) out->push_back({KktCondition::Barycenter, kNoIndex, j, r});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = sum(u.row(i)) - 1;
    if (!r.is_zero()) {
      f.row_sums = false;
      if (out) out->push_back({KktCondition::RowSum, i, kNoIndex, r});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (u(i, j).sign() < 0) {
        f.nonnegative = false;
        if (out) out->push_back({KktCondition::PrimalNonnegativity, i, j, u(i, j)});
      }
    }
  }
  return f;
}

}  // namespace

KktCertificate certify(const Matrix& u, const DualSolution& dual, const StochasticVector& p,
                       const StochasticVector& q) {
  check_shapes(u, p, q);
  const std::size_t n = p.size();
  if (dual.alpha.size() != n || dual.beta.size() != n || dual.gamma.rows() != n ||
      dual.gamma.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "dual solution does not match n");
  }

  KktCertificate c;
  auto& v = c.violations;

  c.stationarity = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational r = q[i] * dual.alpha[j] + dual.beta[i] - dual.gamma(i, j);
      if (i == j) r -= 1;
      if (!r.is_zero()) {
        c.stationarity = false;
        v.push_back({KktCondition::Stationarity, i, j, std::move(r)});
      }
    }
  }

  const PrimalFlags f = check_primal(u, p, q, &v);
  c.barycenter = f.barycenter;
  c.row_sums = f.row_sums;
  c.primal_nonnegative = f.nonnegative;

  c.dual_feasible = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dual.gamma(i, j).sign() < 0) {
        c.dual_feasible = false;
        v.push_back({KktCondition::DualNonnegativity, i, j, dual.gamma(i, j)});
      }
    }
  }

  // tr(UΓᵀ) = Σ_ij u_ij γ_ij
  Rational slack;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) slack += u(i, j) * dual.gamma(i, j);
  c.complementary_slack = slack.is_zero();
  if (!c.complementary_slack) v.push_back({KktCondition::ComplementarySlackness, kNoIndex, kNoIndex, slack});

  const Rational gap = trace(u) - (dot(dual.alpha, p.entries()) + sum(dual.beta));
  c.strong_duality = gap.is_zero();
  if (!c.strong_duality) v.push_back({KktCondition::StrongDuality, kNoIndex, kNoIndex, gap});

  return c;
}

bool is_member(const Matrix& u, const StochasticVector& p, const StochasticVector& q) {
  check_shapes(u, p, q);
  const PrimalFlags f = check_primal(u, p, q, nullptr);
  return f.barycenter && f.row_sums && f.nonnegative;
}

}  // namespace barysimplex
