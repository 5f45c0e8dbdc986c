#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "barysimplex/matrix.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex {

// Bijection on {0..n-1}; image(i) is the column of the 1 in row i of the
// corresponding permutation matrix.
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  // Throws InvalidArgument unless `mapping` is a bijection on {0..n-1}.
  static Permutation from_mapping(std::vector<std::size_t> mapping);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& mapping() const noexcept { return map_; }

  Permutation inverse() const;
  Matrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {}
  std::vector<std::size_t> map_;
};

// Which optimal vertex of the permuted problem to return when it is not unique.
enum class FaceVertex { closed_form, witness };

struct PermOptions {
  // Forces M̂; must be optimal, otherwise solve_p_perm throws InvalidArgument.
  std::optional<Permutation> permutation;
  FaceVertex vertex = FaceVertex::closed_form;
};

struct PermOptResult {
  Permutation m_hat;
  StochasticMatrix u_hat;
  Rational trace_perm;   // tr(M̂Û)
  Rational trace_base;   // tr(Ū)
  Rational absdet_perm;  // |det Û|
  Rational absdet_base;  // |det Ū|
};

// c_ij = min{p_j / q_i, 1}
Matrix assignment_costs(const StochasticVector& p, const StochasticVector& q);

// Maximizes Σ_i c_{i,σ(i)} with a Hungarian (shortest augmenting path) solve
// over exact rationals. Among all optimal σ, returns the lexicographically
// smallest: it is the first perfect matching found on the tight edges of the
// optimal dual potentials.
Permutation solve_assignment(const Matrix& costs);

Rational assignment_value(const Matrix& costs, const Permutation& sigma);

// max tr(MU) over U ∈ 𝒰 for the fixed M given by `m`, i.e. tr Ū(p, Mq).
Rational permuted_trace(const StochasticVector& p, const StochasticVector& q, const Permutation& m);

// max over all n! permutations of permuted_trace. Exponential; meant for small n.
Rational brute_force_perm_trace(const StochasticVector& p, const StochasticVector& q);

// Solves max{ tr(MU) : U ∈ 𝒰, M a permutation }.
//
// The assignment on assignment_costs returns π with Σ_k c_{k,π(k)} optimal.
// For fixed M with image σ, the best U satisfies MU = Ū(p, Mq) where
// (Mq)_i = q_σ(i), whose trace is Σ_i c_{σ(i),i}. Hence M̂ = π⁻¹ and
// Û = M̂ᵀ Ū(p, M̂q). The result is checked for membership in 𝒰 and trace
// optimality, and for n ≤ 6 against brute_force_perm_trace.
PermOptResult solve_p_perm(const StochasticVector& p, const StochasticVector& q,
                           const PermOptions& options = {});

// Rows of U as barycentric coordinates of the simplex vertices.
std::vector<Vector> simplex_vertices(const StochasticMatrix& u);

}  // namespace barysimplex
