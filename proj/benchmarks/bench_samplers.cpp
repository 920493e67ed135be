#include <benchmark/benchmark.h>

#include "rmt/aztec.hpp"
#include "rmt/combinat.hpp"
#include "rmt/involution.hpp"
#include "rmt/rng.hpp"

namespace {

void BM_PatiencePiles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::StreamRng rng(1, 0);
  for (auto _ : state) {
    const rmt::Permutation p = rmt::Permutation::random(n, rng);
    benchmark::DoNotOptimize(rmt::patience_piles(p));
  }
}

void BM_RskFirstTwoRows(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::StreamRng rng(2, 0);
  for (auto _ : state) {
    const rmt::Permutation p = rmt::Permutation::random(n, rng);
    benchmark::DoNotOptimize(rmt::rsk_first_two_rows(p));
  }
}

void BM_InvolutionSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rmt::InvolutionSampler sampler(n);
  rmt::StreamRng rng(3, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.sample(rng));
  }
}

void BM_AztecSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    rmt::StreamRng rng(4, stream++);
    benchmark::DoNotOptimize(rmt::sample_aztec(n, rng));
  }
}

}  // namespace

BENCHMARK(BM_PatiencePiles)->Arg(1024)->Arg(4096);
BENCHMARK(BM_RskFirstTwoRows)->Arg(1024)->Arg(4096);
BENCHMARK(BM_InvolutionSample)->Arg(1024)->Arg(4096);
BENCHMARK(BM_AztecSample)->Arg(32)->Arg(64)->Arg(128);
