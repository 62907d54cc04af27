// Orbit-parallel symmetrizer rank against the serial single-elimination
// reference, on transposition classes of S_k.

#include <benchmark/benchmark.h>

#include "bzeta/braided_sets.hpp"

namespace {

void run(benchmark::State& state, bzeta::SymmetrizerKernel kernel) {
  const auto k = static_cast<int>(state.range(0));
  const auto j = static_cast<int>(state.range(1));
  const bzeta::BraidedSet x = bzeta::transpositions(k);
  bzeta::SymmetrizerOptions opts;
  opts.kernel = kernel;
  std::size_t rank = 0;
  for (auto _ : state) {
    rank = bzeta::symmetrizer_rank(x, j, opts);
    benchmark::DoNotOptimize(rank);
  }
  state.counters["rank"] = static_cast<double>(rank);
}

void BM_SymmetrizerParallel(benchmark::State& state) { run(state, bzeta::SymmetrizerKernel::parallel_orbits); }
void BM_SymmetrizerSerial(benchmark::State& state) { run(state, bzeta::SymmetrizerKernel::serial); }

const std::vector<std::vector<int64_t>> kCases{{3, 4}, {4, 4}, {4, 5}, {4, 6}, {5, 3}, {5, 4}};

}  // namespace

BENCHMARK(BM_SymmetrizerParallel)->ArgsProduct({{4}, {4, 5, 6}})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetrizerSerial)->ArgsProduct({{4}, {4, 5, 6}})->Args({5, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
