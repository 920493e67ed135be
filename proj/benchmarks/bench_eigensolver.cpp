#include <benchmark/benchmark.h>

#include "rmt/ensembles.hpp"
#include "rmt/linalg.hpp"
#include "rmt/rng.hpp"

namespace {

void BM_SymmetricEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::StreamRng rng(1, 0);
  rmt::SquareMatrix base(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      base(i, j) = base(j, i) = rng.normal();
    }
  }
  for (auto _ : state) {
    rmt::SquareMatrix a = base;
    benchmark::DoNotOptimize(rmt::symmetric_eigenvalues(a));
  }
  state.SetComplexityN(n);
}

void BM_SampleGue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmt::sample_matrix({2, n}, 7, stream++));
  }
}

}  // namespace

BENCHMARK(BM_SymmetricEigenvalues)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Complexity();
BENCHMARK(BM_SampleGue)->Arg(50)->Arg(100)->Arg(200);
