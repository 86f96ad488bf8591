// Serial reference against the OpenMP kernels: window sumsets and the
// exhaustive Z/gZ pair driver.

#include <random>

#include <benchmark/benchmark.h>

#include "addbasis/kernels.hpp"
#include "addbasis/residue.hpp"

namespace {

using namespace addbasis;
using kernels::BitWindow;

BitWindow random_window(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitWindow w(0, n - 1);
  for (std::int64_t x = 0; x < n; ++x)
    if (rng() % 8 == 0) w.set(x);
  return w;
}

template <BitWindow (*Kernel)(const BitWindow&, const BitWindow&, kernels::Int)>
void BM_Sumset(benchmark::State& state) {
  const auto n = state.range(0);
  const auto a = random_window(n, 1);
  const auto b = random_window(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b, 2 * n - 2));
  state.SetComplexityN(n);
}

BENCHMARK(BM_Sumset<kernels::sumset_reference>)->Name("sumset/reference")->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_Sumset<kernels::sumset_serial>)->Name("sumset/serial")->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_Sumset<kernels::sumset_parallel>)->Name("sumset/parallel")->RangeMultiplier(4)->Range(256, 1 << 18);

void BM_Kneser(benchmark::State& state, Execution mode) {
  const Int g = state.range(0);
  for (auto _ : state) {
    const auto r = exhaustive_check(g, 2, [g](std::span<const std::uint64_t> m) {
      return kneser_witness(ResidueSet::from_bits(g, m[0]), ResidueSet::from_bits(g, m[1])).holds();
    }, mode);
    benchmark::DoNotOptimize(r.checked);
  }
}

BENCHMARK_CAPTURE(BM_Kneser, serial, Execution::Serial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Kneser, parallel, Execution::Parallel)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
