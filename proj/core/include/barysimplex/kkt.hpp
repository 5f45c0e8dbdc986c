#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "barysimplex/closed_form.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex {

enum class KktCondition {
  Stationarity,            // qαᵀ + β1ᵀ − Γ = I
  Barycenter,              // pᵀ = qᵀU
  RowSum,                  // U1 = 1
  PrimalNonnegativity,     // U ≥ 0
  DualNonnegativity,       // Γ ≥ 0
  ComplementarySlackness,  // tr(UΓᵀ) = 0
  StrongDuality,           // tr(U) = αᵀp + βᵀ1
};

std::string_view to_string(KktCondition c) noexcept;

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// `residual` is lhs − rhs of the violated relation (or the offending entry for
// sign constraints). Unused indices are kNoIndex.
struct KktViolation {
  KktCondition condition;
  std::size_t row = kNoIndex;
  std::size_t col = kNoIndex;
  Rational residual;
};

struct KktCertificate {
  bool stationarity = false;
  bool barycenter = false;
  bool row_sums = false;
  bool primal_nonnegative = false;
  bool dual_feasible = false;
  bool complementary_slack = false;
  bool strong_duality = false;
  std::vector<KktViolation> violations;

  bool primal_feasible() const { return barycenter && row_sums && primal_nonnegative; }
  bool all_pass() const {
    return stationarity && primal_feasible() && dual_feasible && complementary_slack && strong_duality;
  }
};

// Evaluates every condition exactly and lists all violations, not just the first.
KktCertificate certify(const Matrix& u, const DualSolution& dual, const StochasticVector& p,
                       const StochasticVector& q);

inline KktCertificate certify(const StochasticMatrix& u, const DualSolution& dual,
                              const StochasticVector& p, const StochasticVector& q) {
  return certify(u.matrix(), dual, p, q);
}

// U ∈ { U : Uᵀq = p, U1 = 1, U ≥ 0 }.
bool is_member(const Matrix& u, const StochasticVector& p, const StochasticVector& q);

inline bool is_member(const StochasticMatrix& u, const StochasticVector& p,
                      const StochasticVector& q) {
  return is_member(u.matrix(), p, q);
}

}  // namespace barysimplex
