#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "barysimplex/matrix.hpp"
#include "barysimplex/rational.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

inline Vector vec(std::initializer_list<const char*> items) {
  Vector v;
  for (const char* s : items) v.push_back(R(s));
  return v;
}

inline StochasticVector sv(std::initializer_list<const char*> items) {
  return StochasticVector::validate(vec(items));
}

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) out.push_back(vec(r));
  return Matrix::from_rows(out);
}

// Worked example with a single index below target (unique optimum).
inline StochasticVector unique_case_p() { return sv({"3/10", "2/5", "1/10", "1/5"}); }
inline StochasticVector unique_case_q() { return sv({"1/8", "3/8", "3/10", "1/5"}); }

// Worked example with two indices on each side (non-unique optimum).
inline StochasticVector tied_case_p() { return sv({"1/4", "1/4", "1/4", "1/4"}); }
inline StochasticVector tied_case_q() { return sv({"1/3", "1/9", "1/2", "1/18"}); }

// Strictly positive stochastic vector from integer weights in [1, max_weight].
inline StochasticVector random_stochastic(std::size_t n, std::mt19937_64& rng, long max_weight = 20) {
  std::uniform_int_distribution<long> w(1, max_weight);
  std::vector<long> weights(n);
  long total = 0;
  for (auto& x : weights) total += (x = w(rng));
  Vector v;
  for (long x : weights) v.emplace_back(x, total);
  return StochasticVector::validate(std::move(v));
}

struct Instance {
  StochasticVector p;
  StochasticVector q;
};

// Random (p, q). With probability `tie_probability` per index, q_i is pinned to
// p_i so the equal set is exercised; the remaining mass of q is spread by
// random integer weights over the other indices.
inline Instance random_instance(std::size_t n, std::mt19937_64& rng, double tie_probability = 0.15,
                                long max_weight = 20) {
  StochasticVector p = random_stochastic(n, rng, max_weight);
  std::bernoulli_distribution tie(tie_probability);
  std::vector<bool> pinned(n);
  std::size_t free_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pinned[i] = tie(rng);
    if (!pinned[i]) ++free_count;
  }
  if (free_count == 0) return {p, p};
  Rational remaining(1);
  for (std::size_t i = 0; i < n; ++i)
    if (pinned[i]) remaining -= p[i];
  std::uniform_int_distribution<long> w(1, max_weight);
  std::vector<long> weights(n, 0);
  long total = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!pinned[i]) total += (weights[i] = w(rng));
  Vector q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = pinned[i] ? p[i] : remaining * Rational(weights[i], total);
  }
  return {p, StochasticVector::validate(std::move(q))};
}

// Random rational in [-bound, bound] with denominators up to `max_den`.
inline Rational random_rational(std::mt19937_64& rng, long bound = 5, long max_den = 7) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-bound * d, bound * d);
  return Rational(num(rng), d);
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  return m;
}

// Laplace expansion along the first row. Independent of the elimination path.
inline Rational cofactor_determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = a(i, j);
      }
    }
    Rational term = a(0, c) * cofactor_determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace barysimplex::testing
