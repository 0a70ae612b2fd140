#include <benchmark/benchmark.h>

#include <random>

#include "avoidlab/curvelab.hpp"
#include "avoidlab/exactlin.hpp"
#include "avoidlab/forms.hpp"
#include "avoidlab/veronese.hpp"

using namespace avoidlab;

namespace {

const PrimeModulus kP;

PrimeMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Residue> e(rows * cols);
  for (auto& x : e) x = static_cast<Residue>(rng() % kP.value());
  return PrimeMatrix(rows, cols, std::move(e), kP);
}

void BM_RankAndKernel(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(size, size + size / 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_and_kernel(m));
}
BENCHMARK(BM_RankAndKernel)->Arg(32)->Arg(128)->Arg(256);

void BM_RestrictionMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<unsigned>(state.range(1));
  const auto curve = random_rational_curve(n, static_cast<unsigned>(n + 4), kP, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_restriction_matrix(n, t, curve.phi));
}
BENCHMARK(BM_RestrictionMatrix)->Args({3, 3})->Args({4, 4})->Args({5, 4});

void BM_ProjectedCohomology(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto vp = build_projection(k, n, kP, 5);
  for (auto _ : state) benchmark::DoNotOptimize(projected_cohomology(vp, 2));
}
BENCHMARK(BM_ProjectedCohomology)->Args({2, 5})->Args({3, 7})->Args({4, 12});

}  // namespace
BENCHMARK_MAIN();
