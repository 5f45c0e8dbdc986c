#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "barysimplex/stochastic.hpp"

namespace barysimplex {

enum class FamilyKind { uniform_segments, beta_bernstein, mapped };

// n monotone maps S_i : [0,1] → [0,1] with S_i(0) = 0 and S_i(1) = 1.
// Indices are 0-based: operator()(0, z) is S_1(z).
class TransformFamily {
 public:
  // S_i is the CDF of the uniform distribution on [(i−1)/n, i/n).
  static TransformFamily uniform(std::size_t n);
  // S_i is the CDF of Beta(i, n − i + 1).
  static TransformFamily beta(std::size_t n);
  // T(z) = U S(z) for a row-stochastic U given in floating point.
  static TransformFamily mapped(const TransformFamily& source, std::vector<std::vector<double>> matrix);

  std::size_t size() const noexcept { return n_; }
  FamilyKind kind() const noexcept { return kind_; }
  // Kind of the innermost source for mapped families.
  FamilyKind root_kind() const noexcept;
  // True when every member is linear between consecutive multiples of 1/n.
  bool piecewise_linear() const noexcept { return root_kind() == FamilyKind::uniform_segments; }

  double operator()(std::size_t i, double z) const;
  std::vector<double> evaluate(double z) const;

 private:
  TransformFamily(FamilyKind kind, std::size_t n) : kind_(kind), n_(n) {}

  FamilyKind kind_;
  std::size_t n_;
  std::shared_ptr<const TransformFamily> source_;
  std::vector<std::vector<double>> matrix_;
};

TransformFamily uniform_family(std::size_t n);
TransformFamily beta_family(std::size_t n);

// Bernstein basis b_j^n(z) = C(n,j) z^j (1−z)^{n−j}, j = 0..n.
std::vector<double> bernstein_basis(std::size_t n, double z);

// Beta(i, n−i+1) CDF (i is 1-based) through the expanded alternating power sum
//   Σ_{j=0}^{n−i} C(n,i) C(n−i,j) i/(i+j) (−1)^j z^{i+j}.
// Prone to cancellation for large n; TransformFamily uses the binomial tail instead.
double beta_cdf_alternating(std::size_t i, std::size_t n, double z);

double standard_normal_cdf(double x);

enum class BaseKind { standard_normal, empirical };

class BaseCdf {
 public:
  static BaseCdf standard_normal();
  // Right-continuous step CDF with a jump of 1/m at each sample; ties merge.
  static BaseCdf empirical(std::vector<double> samples);

  BaseKind kind() const noexcept { return kind_; }
  const std::vector<double>& samples() const noexcept { return samples_; }

  double operator()(double x) const;
  // inf{x : F(x) ≥ u} for u in (0, 1).
  double quantile(double u) const;

 private:
  explicit BaseCdf(BaseKind kind) : kind_(kind) {}
  BaseKind kind_;
  std::vector<double> samples_;
};

struct MonotonicityViolation {
  std::size_t member;  // 0-based
  double z_from;
  double z_to;
  double drop;
};

struct EndpointViolation {
  std::size_t member;  // 0-based
  double z;            // 0 or 1
  double value;
};

struct CoherenceReport {
  double max_residual = 0.0;  // max over grid of |wᵀs(z) − z|
  double tolerance = 0.0;
  std::size_t grid_size = 0;
  std::vector<MonotonicityViolation> monotonicity_violations;
  std::vector<EndpointViolation> endpoint_violations;

  bool pass() const {
    return monotonicity_violations.empty() && endpoint_violations.empty() && max_residual <= tolerance;
  }
};

inline constexpr double kDefaultCoherenceTolerance = 1e-9;
inline constexpr std::size_t kDefaultZGrid = 1001;

// Evaluates the endpoint, monotonicity and total-probability conditions on a
// uniform grid of `grid` points in [0, 1]. Weights must be positive and sum to
// one within 1e-12 (BadWeights otherwise). Endpoint and monotonicity checks
// allow `tolerance` of floating-point slack.
CoherenceReport check_coherence(const TransformFamily& family, const std::vector<double>& weights,
                                std::size_t grid = kDefaultZGrid,
                                double tolerance = kDefaultCoherenceTolerance);

// t(z) = U s(z). If (p, s) is coherent and Uᵀq = p, then (q, t) is coherent.
TransformFamily apply_matrix(const StochasticMatrix& u, const TransformFamily& family);

// ∫₀¹ |S_i(z) − S_{i+1}(z)| dz for i = 1..n−1. Piecewise-linear families are
// integrated exactly segment by segment; others by adaptive Simpson to 1e-10.
// Empty for a single member.
std::vector<double> wasserstein_consecutive(const TransformFamily& family);

// Adaptive Simpson quadrature on [a, b] to absolute tolerance `tol`.
template <typename F>
double integrate(F&& f, double a, double b, double tol);

struct GridTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Columns x, F(x), T_1(F(x)), ..., T_n(F(x)). Throws UnsortedGrid unless x is
// strictly increasing.
GridTable synthesize(const TransformFamily& family, const BaseCdf& base, const std::vector<double>& x_grid);

// Columns z, S_1..S_n, T_1..T_n on `grid` uniform points of [0, 1].
GridTable transform_table(const TransformFamily& source, const TransformFamily& mapped, std::size_t grid);

std::vector<double> uniform_grid(std::size_t count);

// `count` points evenly spaced over [F⁻¹(tail), F⁻¹(1 − tail)].
std::vector<double> default_x_grid(const BaseCdf& base, std::size_t count = 513, double tail = 1e-4);

// Header row, comma separated, LF line endings, 17 significant digits.
std::string to_csv(const GridTable& table);

}  // namespace barysimplex

#include "barysimplex/detail/quadrature.hpp"
