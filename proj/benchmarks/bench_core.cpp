#include <benchmark/benchmark.h>

#include <random>

#include "btres/moore_penrose.hpp"
#include "btres/perturbation.hpp"
#include "btres/zigzag.hpp"

using namespace btres;

namespace {

Quadruple weighted_plane_point() {
  Quadruple q;
  q.n = 3;
  q.k = 2;
  q.psi = IntMatrix{{1, 0, -3}, {0, 1, -1}};
  q.variables = {"x", "y", "z"};
  return q;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

} // namespace

static void BM_EnumerateCells(benchmark::State& state) {
  Quadruple q = weighted_plane_point();
  for (auto _ : state) {
    Stratification s = Stratification::enumerate(q);
    benchmark::DoNotOptimize(s.cells().size());
  }
}
BENCHMARK(BM_EnumerateCells);

static void BM_MpInverse(benchmark::State& state) {
  std::mt19937_64 rng(99);
  std::vector<RatMatrix> mats;
  for (int i = 0; i < 16; ++i) mats.push_back(random_matrix(rng, state.range(0)));
  std::size_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp_inverse(mats[idx++ % mats.size()]));
  }
}
BENCHMARK(BM_MpInverse)->Arg(4)->Arg(6)->Arg(8);

static void BM_MpInverseHedge(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<RatMatrix> mats;
  for (int i = 0; i < 8; ++i) mats.push_back(random_matrix(rng, state.range(0)));
  std::size_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp_inverse_hedge(mats[idx++ % mats.size()]));
  }
}
BENCHMARK(BM_MpInverseHedge)->Arg(4)->Arg(5);

static void BM_MinimalResolution(benchmark::State& state) {
  Quadruple q = weighted_plane_point();
  for (auto _ : state) {
    Pipeline pl = run_pipeline(q);
    benchmark::DoNotOptimize(pl.minimal.complex.length);
  }
}
BENCHMARK(BM_MinimalResolution);

static void BM_PathCrosscheck(benchmark::State& state) {
  Quadruple q = weighted_plane_point();
  Pipeline pl = run_pipeline(q);
  for (auto _ : state) {
    PathOracle oracle(pl.strat, pl.hhl, pl.grading, pl.contraction);
    benchmark::DoNotOptimize(oracle.crosscheck_sigma(pl.perturbed).ok);
  }
}
BENCHMARK(BM_PathCrosscheck);

BENCHMARK_MAIN();
