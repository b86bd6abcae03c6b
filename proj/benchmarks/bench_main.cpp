#include <benchmark/benchmark.h>

#include "flopk/flopk.hpp"

namespace {

void BM_LittlewoodRichardson(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const flopk::Partition a({n, n - 1, 1});
  const flopk::Partition b({n - 1, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(flopk::lr_coefficients(a, b));
}
BENCHMARK(BM_LittlewoodRichardson)->DenseRange(3, 6);

void BM_ChMatrix(benchmark::State& state) {
  const auto box = flopk::BoxShape::grassmannian(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flopk::ch_matrix(box));
}
BENCHMARK(BM_ChMatrix)->DenseRange(4, 6);

void BM_FlopMatrix(benchmark::State& state) {
  const auto box = flopk::BoxShape::grassmannian(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(flopk::flop_matrix(box));
}
BENCHMARK(BM_FlopMatrix)->Args({1, 4})->Args({2, 4})->Args({2, 5})->Args({3, 6});

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = flopk::flop_matrix(flopk::BoxShape::grassmannian(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(flopk::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 6);

}  // namespace
BENCHMARK_MAIN();
