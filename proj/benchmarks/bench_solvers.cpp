#include <benchmark/benchmark.h>

#include <random>

#include "algebra/solvers.hpp"

namespace {

using namespace algebra;

std::vector<Complex> random_coeffs(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<Complex> c(count);
  for (auto& z : c) z = {dist(rng), dist(rng)};
  if (std::abs(c[0]) < 1.0) c[0] += Complex{2.0, 0.0};
  return c;
}

void BM_SolveCubic(benchmark::State& state) {
  auto c = random_coeffs(4, 42);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cubic(c[0], c[1], c[2], c[3]));
}
BENCHMARK(BM_SolveCubic);

void BM_SolveQuartic(benchmark::State& state) {
  auto c = random_coeffs(5, 43);
  for (auto _ : state) benchmark::DoNotOptimize(solve_quartic(c[0], c[1], c[2], c[3], c[4]));
}
BENCHMARK(BM_SolveQuartic);

void BM_NthRoots(benchmark::State& state) {
  const Complex c{3.0, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(nth_roots(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NthRoots)->Arg(4)->Arg(16);

void BM_BisectRealRoot(benchmark::State& state) {
  Poly p({Complex{-1.0}, Complex{-1.0}, Complex{}, Complex{}, Complex{}, Complex{1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(bisect_real_root(p, 1.0, 2.0));
}
BENCHMARK(BM_BisectRealRoot);

}  // namespace

BENCHMARK_MAIN();
