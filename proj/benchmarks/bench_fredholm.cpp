#include <benchmark/benchmark.h>

#include "rmt/kernels.hpp"

namespace {

void BM_SineDeterminant(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rmt::fredholm_det(rmt::KernelOperator::sine(-1.0, 1.0, order)));
  }
}

void BM_AiryDeterminant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmt::fredholm_det(rmt::KernelOperator::airy_tail(-2.0)));
  }
}

void BM_NumberVariance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmt::number_variance(50.0));
  }
}

}  // namespace

BENCHMARK(BM_SineDeterminant)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_AiryDeterminant);
BENCHMARK(BM_NumberVariance);
