#include <benchmark/benchmark.h>

#include "erdos_straus/covering.hpp"
#include "erdos_straus/sieve.hpp"

namespace {

void BM_SievePrimes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(erdos_straus::sieve_primes(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SievePrimes)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_UncoveredPrimes(benchmark::State& state) {
  const auto classes = erdos_straus::classes_for(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(erdos_straus::uncovered_primes(1'000'000, classes));
  }
}
BENCHMARK(BM_UncoveredPrimes)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ResidueCensusKZero(benchmark::State& state) {
  const auto classes = erdos_straus::classes_for(0);
  for (auto _ : state) benchmark::DoNotOptimize(erdos_straus::residue_census(classes));
}
BENCHMARK(BM_ResidueCensusKZero)->Unit(benchmark::kMicrosecond);

}  // namespace
