#include <random>

#include <benchmark/benchmark.h>

#include "barysimplex/closed_form.hpp"
#include "barysimplex/kkt.hpp"
#include "barysimplex/permutation_opt.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace barysimplex;

testing::Instance instance(std::size_t n) {
  std::mt19937_64 rng(n);
  return testing::random_instance(n, rng, 0.1, 1000);
}

void BM_BuildPrimal(benchmark::State& state) {
  const auto [p, q] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_optimal_primal(p, q));
}
BENCHMARK(BM_BuildPrimal)->RangeMultiplier(2)->Range(4, 128);

void BM_Certify(benchmark::State& state) {
  const auto [p, q] = instance(static_cast<std::size_t>(state.range(0)));
  const auto u = build_optimal_primal(p, q);
  const auto d = build_dual(p, q);
  for (auto _ : state) benchmark::DoNotOptimize(certify(u, d, p, q));
}
BENCHMARK(BM_Certify)->RangeMultiplier(2)->Range(4, 128);

void BM_Classify(benchmark::State& state) {
  const auto [p, q] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p, q));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(4, 32);

void BM_Determinant(benchmark::State& state) {
  const auto [p, q] = instance(static_cast<std::size_t>(state.range(0)));
  const Matrix v = build_inverse(p, q);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(v));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 32);

void BM_SolveAssignment(benchmark::State& state) {
  const auto [p, q] = instance(static_cast<std::size_t>(state.range(0)));
  const Matrix c = assignment_costs(p, q);
  for (auto _ : state) benchmark::DoNotOptimize(solve_assignment(c));
}
BENCHMARK(BM_SolveAssignment)->RangeMultiplier(2)->Range(4, 64);

void BM_SolvePPerm(benchmark::State& state) {
  const auto [p, q] = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_p_perm(p, q));
}
BENCHMARK(BM_SolvePPerm)->DenseRange(2, 7);

}  // namespace
