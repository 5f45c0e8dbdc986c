#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "barysimplex/closed_form.hpp"
#include "barysimplex/matrix.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex {

enum class Sense { maximize, minimize };

// optimize cᵀx  s.t.  Ax = b, x ≥ 0.
struct StandardFormLp {
  Sense sense = Sense::maximize;
  Vector objective;
  Matrix constraints;
  Vector rhs;

  std::size_t variable_count() const noexcept { return objective.size(); }
  std::size_t constraint_count() const noexcept { return rhs.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string_view to_string(LpStatus s) noexcept;

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;                 // in the LP's own sense; meaningful when optimal
  Vector values;                  // one per variable
  std::vector<std::size_t> basis; // basic columns after redundant rows are dropped
  Rational phase_one_value;       // sum of artificials at the end of phase 1
  std::size_t pivots = 0;
};

// Dense two-phase simplex over exact rationals with Bland's rule, so it
// terminates on degenerate problems. Linearly dependent equality rows are
// detected after phase 1 and dropped. Throws MalformedLp on inconsistent shapes.
LpSolution solve(const StandardFormLp& lp);

// Primal problem on n² variables u_ij (index i*n + j): n row-sum equalities
// followed by n barycenter equalities Σ_i q_i u_ij = p_j. Maximizes Σ u_ii.
StandardFormLp encode_primal(const StochasticVector& p, const StochasticVector& q);

// Reshapes an encode_primal solution back into the n×n matrix U.
Matrix primal_matrix(const LpSolution& solution, std::size_t n);

// Dual problem with free α, β split into signed pairs. Variable layout:
// [α⁺ (n) | α⁻ (n) | β⁺ (n) | β⁻ (n) | γ (n², index i*n + j)].
// One equality q_i α_j + β_i − γ_ij = δ_ij per (i, j). Minimizes αᵀp + βᵀ1.
StandardFormLp encode_dual(const StochasticVector& p, const StochasticVector& q);

LpSolution solve_dual(const StochasticVector& p, const StochasticVector& q);

// Recombines the signed pairs of a solve_dual solution.
DualSolution decode_dual(const LpSolution& solution, const StochasticVector& p,
                         const StochasticVector& q);

}  // namespace barysimplex
