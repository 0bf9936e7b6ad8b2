// Parallel norm kernel against the serial reference and the exhaustive
// search, on seeded random vectors.

#include <benchmark/benchmark.h>

#include <random>

#include "schreier/norm.hpp"

using namespace schreier;

namespace {

// Dense random vector on [start, start + support).
RationalVector sample(std::size_t support, Element start, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  RationalVector x;
  for (std::size_t i = 0; i < support; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    x.set(start + static_cast<Element>(i), q);
  }
  return x;
}

template <NormResult (*Kernel)(const RationalVector&, Ordinal)>
void run(benchmark::State& state) {
  const Ordinal xi{static_cast<unsigned>(state.range(0))};
  const auto x = sample(static_cast<std::size_t>(state.range(1)), 2, 42);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, xi));
  state.SetComplexityN(state.range(1));
}

void BM_bruteforce(benchmark::State& state) {
  const Ordinal xi{static_cast<unsigned>(state.range(0))};
  const auto x = sample(static_cast<std::size_t>(state.range(1)), 2, 42);
  for (auto _ : state) benchmark::DoNotOptimize(norm_bruteforce(x, xi, SearchBudget{std::uint64_t{1} << 26}));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long xi : {1, 2, 3})
    for (long n : {64, 256, 1024}) b->Args({xi, n});
}

}  // namespace

BENCHMARK(run<norm>)->Name("norm_parallel")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(run<norm_serial>)->Name("norm_serial")->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bruteforce)->Args({1, 12})->Args({2, 12})->Args({1, 18})->Args({2, 18})->Unit(benchmark::kMillisecond);
BENCHMARK(run<norm>)->Name("norm_parallel_small")->Args({1, 12})->Args({2, 12})->Args({1, 18})->Args({2, 18})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
