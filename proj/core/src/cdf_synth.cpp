#include "barysimplex/cdf_synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "barysimplex/error.hpp"

namespace barysimplex {
namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

void require_members(std::size_t n, const char* what) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": n must be at least 1");
}

}  // namespace

TransformFamily TransformFamily::uniform(std::size_t n) {
  require_members(n, "uniform family");
  return TransformFamily(FamilyKind::uniform_segments, n);
}

TransformFamily TransformFamily::beta(std::size_t n) {
  require_members(n, "beta family");
  return TransformFamily(FamilyKind::beta_bernstein, n);
}

TransformFamily TransformFamily::mapped(const TransformFamily& source, std::vector<std::vector<double>> matrix) {
  if (matrix.size() != source.size()) throw Error(ErrorCode::DimensionMismatch, "mapping matrix rows");
  for (const auto& row : matrix) {
    if (row.size() != source.size()) throw Error(ErrorCode::DimensionMismatch, "mapping matrix columns");
  }
  TransformFamily f(FamilyKind::mapped, source.size());
  f.source_ = std::make_shared<const TransformFamily>(source);
  f.matrix_ = std::move(matrix);
  return f;
}

FamilyKind TransformFamily::root_kind() const noexcept {
  return kind_ == FamilyKind::mapped ? source_->root_kind() : kind_;
}

std::vector<double> TransformFamily::evaluate(double z) const {
  std::vector<double> s(n_);
  switch (kind_) {
    case FamilyKind::uniform_segments: {
      const double nd = static_cast<double>(n_);
      for (std::size_t i = 0; i < n_; ++i) s[i] = std::clamp(nd * z - static_cast<double>(i), 0.0, 1.0);
      break;
    }
    case FamilyKind::beta_bernstein: {
      // S_i(z) = Σ_{j=i}^{n} b_j^n(z), accumulated from the top.
      const auto b = bernstein_basis(n_, z);
      double tail = 0.0;
      for (std::size_t i = n_; i >= 1; --i) {
        tail += b[i];
        s[i - 1] = std::min(tail, 1.0);
      }
      break;
    }
    case FamilyKind::mapped: {
      const auto inner = source_->evaluate(z);
      for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n_; ++k) acc += matrix_[i][k] * inner[k];
        s[i] = acc;
      }
      break;
    }
  }
  return s;
}

double TransformFamily::operator()(std::size_t i, double z) const {
  if (i >= n_) throw Error(ErrorCode::InvalidArgument, "member index out of range");
  if (kind_ == FamilyKind::uniform_segments) {
    return std::clamp(static_cast<double>(n_) * z - static_cast<double>(i), 0.0, 1.0);
  }
  return evaluate(z)[i];
}

TransformFamily uniform_family(std::size_t n) { return TransformFamily::uniform(n); }
TransformFamily beta_family(std::size_t n) { return TransformFamily::beta(n); }

std::vector<double> bernstein_basis(std::size_t n, double z) {
  std::vector<double> b(n + 1);
  const double w = 1.0 - z;
  for (std::size_t j = 0; j <= n; ++j) {
    b[j] = binomial(n, j) * std::pow(z, static_cast<double>(j)) * std::pow(w, static_cast<double>(n - j));
  }
  return b;
}

double beta_cdf_alternating(std::size_t i, std::size_t n, double z) {
  if (i == 0 || i > n) throw Error(ErrorCode::InvalidArgument, "beta member index must be in 1..n");
  const double lead = binomial(n, i);
  double total = 0.0;
  for (std::size_t j = 0; j <= n - i; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    total += lead * binomial(n - i, j) * static_cast<double>(i) / static_cast<double>(i + j) * sign *
             std::pow(z, static_cast<double>(i + j));
  }
  return total;
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

BaseCdf BaseCdf::standard_normal() { return BaseCdf(BaseKind::standard_normal); }

BaseCdf BaseCdf::empirical(std::vector<double> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "empirical CDF needs at least one sample");
  for (double s : samples) {
    if (!std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "empirical samples must be finite");
  }
  std::sort(samples.begin(), samples.end());
  BaseCdf f(BaseKind::empirical);
  f.samples_ = std::move(samples);
  return f;
}

double BaseCdf::operator()(double x) const {
  if (kind_ == BaseKind::standard_normal) return standard_normal_cdf(x);
  const auto at_or_below = std::upper_bound(samples_.begin(), samples_.end(), x) - samples_.begin();
  return static_cast<double>(at_or_below) / static_cast<double>(samples_.size());
}

double BaseCdf::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw Error(ErrorCode::InvalidArgument, "quantile level must be in (0, 1)");
  if (kind_ == BaseKind::empirical) {
    const double m = static_cast<double>(samples_.size());
    auto k = static_cast<std::size_t>(std::ceil(u * m - 1e-12));
    k = std::clamp<std::size_t>(k, 1, samples_.size());
    return samples_[k - 1];
  }
  double lo = -40.0, hi = 40.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (standard_normal_cdf(mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CoherenceReport check_coherence(const TransformFamily& family, const std::vector<double>& weights,
                                std::size_t grid, double tolerance) {
  const std::size_t n = family.size();
  if (weights.size() != n) {
    throw Error(ErrorCode::BadWeights, std::to_string(weights.size()) + " weights for " +
                                           std::to_string(n) + " members");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::BadWeights, "weights must be positive");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) throw Error(ErrorCode::BadWeights, "weights do not sum to 1");
  if (grid < 2) throw Error(ErrorCode::InvalidArgument, "coherence grid needs at least 2 points");

  CoherenceReport r;
  r.tolerance = tolerance;
  r.grid_size = grid;
  std::vector<double> prev;
  double prev_z = 0.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double z = static_cast<double>(k) / static_cast<double>(grid - 1);
    const auto s = family.evaluate(z);
    double mix = 0.0;
    for (std::size_t i = 0; i < n; ++i) mix += weights[i] * s[i];
    r.max_residual = std::max(r.max_residual, std::fabs(mix - z));
    if (k == 0 || k + 1 == grid) {
      const double target = k == 0 ? 0.0 : 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(s[i] - target) > tolerance) r.endpoint_violations.push_back({i, z, s[i]});
      }
    }
    if (!prev.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (prev[i] - s[i] > tolerance) r.monotonicity_violations.push_back({i, prev_z, z, prev[i] - s[i]});
      }
    }
    prev = s;
    prev_z = z;
  }
  return r;
}

TransformFamily apply_matrix(const StochasticMatrix& u, const TransformFamily& family) {
  if (u.size() != family.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(u.size()) + "x" +
                                                  std::to_string(u.size()) + ", family has " +
                                                  std::to_string(family.size()) + " members");
  }
  return TransformFamily::mapped(family, to_doubles(u.matrix()));
}

namespace {

// ∫ over [a, b] of |d| for d linear with end values da, db.
double abs_linear_integral(double a, double b, double da, double db) {
  const double h = b - a;
  if ((da >= 0.0 && db >= 0.0) || (da <= 0.0 && db <= 0.0)) return 0.5 * h * (std::fabs(da) + std::fabs(db));
  return 0.5 * h * (da * da + db * db) / (std::fabs(da) + std::fabs(db));
}

}  // namespace

std::vector<double> wasserstein_consecutive(const TransformFamily& family) {
  const std::size_t n = family.size();
  if (n < 2) return {};
  std::vector<double> out(n - 1, 0.0);
  if (family.piecewise_linear()) {
    const double nd = static_cast<double>(n);
    auto lo_vals = family.evaluate(0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double a = static_cast<double>(k) / nd;
      const double b = static_cast<double>(k + 1) / nd;
      const auto hi_vals = family.evaluate(b);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] += abs_linear_integral(a, b, lo_vals[i] - lo_vals[i + 1], hi_vals[i] - hi_vals[i + 1]);
      }
      lo_vals = hi_vals;
    }
    return out;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = integrate(
        [&](double z) {
          const auto s = family.evaluate(z);
          return std::fabs(s[i] - s[i + 1]);
        },
        0.0, 1.0, 1e-10);
  }
  return out;
}

GridTable synthesize(const TransformFamily& family, const BaseCdf& base, const std::vector<double>& x_grid) {
  for (std::size_t k = 1; k < x_grid.size(); ++k) {
    if (!(x_grid[k] > x_grid[k - 1])) {
      throw Error(ErrorCode::UnsortedGrid, "x grid is not strictly increasing at position " + std::to_string(k));
    }
  }
  GridTable t;
  t.columns = {"x", "F"};
  for (std::size_t i = 1; i <= family.size(); ++i) t.columns.push_back("T" + std::to_string(i));
  t.rows.reserve(x_grid.size());
  for (double x : x_grid) {
    const double f = base(x);
    std::vector<double> row{x, f};
    const auto s = family.evaluate(f);
    row.insert(row.end(), s.begin(), s.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

GridTable transform_table(const TransformFamily& source, const TransformFamily& mapped, std::size_t grid) {
  if (source.size() != mapped.size()) throw Error(ErrorCode::DimensionMismatch, "transform_table families");
  GridTable t;
  t.columns = {"z"};
  for (std::size_t i = 1; i <= source.size(); ++i) t.columns.push_back("S" + std::to_string(i));
  for (std::size_t i = 1; i <= mapped.size(); ++i) t.columns.push_back("T" + std::to_string(i));
  for (double z : uniform_grid(grid)) {
    std::vector<double> row{z};
    const auto s = source.evaluate(z);
    const auto m = mapped.evaluate(z);
    row.insert(row.end(), s.begin(), s.end());
    row.insert(row.end(), m.begin(), m.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<double> uniform_grid(std::size_t count) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> z(count);
  for (std::size_t k = 0; k < count; ++k) z[k] = static_cast<double>(k) / static_cast<double>(count - 1);
  return z;
}

std::vector<double> default_x_grid(const BaseCdf& base, std::size_t count, double tail) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  double lo = base.quantile(tail);
  double hi = base.quantile(1.0 - tail);
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  std::vector<double> x(count);
  for (std::size_t k = 0; k < count; ++k) {
    x[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  x.back() = hi;
  return x;
}

std::string to_csv(const GridTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  char buf[32];
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[c]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace barysimplex
