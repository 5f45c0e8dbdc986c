#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "barysimplex/matrix.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex {

// Three-way split of {0..n-1} by comparing p_i against q_i. Indices ascend.
struct IndexPartition {
  std::vector<std::size_t> greater;  // p_i > q_i
  std::vector<std::size_t> equal;    // p_i = q_i
  std::vector<std::size_t> less;     // p_i < q_i
};

// Optimal solution of the dual LP  min αᵀp + βᵀ1  s.t.  qαᵀ + β1ᵀ − Γ = I, Γ ≥ 0.
struct DualSolution {
  Vector alpha;
  Vector beta;
  Matrix gamma;
  Rational objective;
};

// Direction Ũ in the null space of the constraints, and the optimum it leads to.
struct UniquenessWitness {
  std::size_t row_a = 0;  // i  (smallest index in `less`)
  std::size_t row_b = 0;  // i' (second smallest in `less`)
  std::size_t col_a = 0;  // j  (smallest index in `greater`)
  std::size_t col_b = 0;  // j' (second smallest in `greater`)
  Matrix direction;
  Rational step;
  StochasticMatrix alternate;
};

struct UniquenessReport {
  bool unique = true;
  IndexPartition partition;
  std::optional<UniquenessWitness> witness;
};

struct ClassificationReport {
  bool inverse_pair = false;       // ŪV̄ = V̄Ū = I
  bool z_matrix = false;           // V̄ off-diagonal ≤ 0
  Rational max_offdiag_inverse;    // largest off-diagonal entry of V̄
  bool m_matrix = false;           // Z-matrix, nonsingular, V̄⁻¹ = Ū ≥ 0
  Rational det_inverse;            // det V̄
  Rational min_entry_primal;       // smallest entry of Ū
  bool inverse_m = false;          // Ū is the inverse of the M-matrix V̄

  bool all_pass() const { return inverse_pair && z_matrix && m_matrix && inverse_m; }
};

enum class WhichMatrix { primal, inverse };

IndexPartition index_partition(const StochasticVector& p, const StochasticVector& q);

// Closed-form maximizer of tr(U) over { U ≥ 0 : U1 = 1, Uᵀq = p }:
//   ū_ii = min{p_i/q_i, 1},
//   ū_ij = [1 − p_i/q_i]^+ [p_j − q_j]^+ / Σ_k [p_k − q_k]^+   (i ≠ j, p ≠ q).
StochasticMatrix build_optimal_primal(const StochasticVector& p, const StochasticVector& q);

// Inverse of the closed-form primal:
//   v̄_ii = max{q_i/p_i, 1},
//   v̄_ij = [1 − q_i/p_i]^- [p_j − q_j]^+ / Σ_k [p_k − q_k]^+   (i ≠ j, p ≠ q).
Matrix build_inverse(const StochasticVector& p, const StochasticVector& q);

//   ᾱ_j = 𝟙[p_j < q_j] / q_j,   β̄_i = 𝟙[p_i ≥ q_i],
//   γ̄_ij = 𝟙[p_i ≥ q_i] + 𝟙[p_j < q_j] q_i/q_j − 𝟙[i = j].
DualSolution build_dual(const StochasticVector& p, const StochasticVector& q);

// Diagonal of Ū (or V̄); these are exactly the eigenvalues.
Vector eigenvalues(const StochasticVector& p, const StochasticVector& q,
                   WhichMatrix which = WhichMatrix::primal);

// Checks det(A − λI) = Π(d_i − λ) at λ = 0, 1, ..., n. Both sides are degree-n
// polynomials in λ, so agreement at n+1 points is agreement everywhere.
bool characteristic_identity_holds(const Matrix& a, const Vector& diag);

ClassificationReport classify(const StochasticVector& p, const StochasticVector& q);

// Ū is uniquely optimal iff |greater| ≤ 1 or |less| ≤ 1. Otherwise a witness
// is built from the two smallest indices of each side, stepped as far as
// feasibility allows.
UniquenessReport uniqueness(const StochasticVector& p, const StochasticVector& q);

}  // namespace barysimplex
