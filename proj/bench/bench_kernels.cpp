#include <benchmark/benchmark.h>

#include "slee/canonical.hpp"
#include "slee/enumeration.hpp"
#include "slee/parallel.hpp"
#include "slee/semiwalk.hpp"
#include "slee/spectral.hpp"

namespace {

const slee::EnumerationResult& universe10() {
  static const auto result = slee::enumerate_unicyclic(10);
  return result;
}

void BM_SleeBatchSerial(benchmark::State& state) {
  const auto& graphs = universe10().graphs;
  for (auto _ : state) benchmark::DoNotOptimize(slee::slee_batch_serial(graphs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_SleeBatchSerial)->Unit(benchmark::kMillisecond);

void BM_SleeBatchParallel(benchmark::State& state) {
  const auto& graphs = universe10().graphs;
  const slee::ParallelOptions options{static_cast<int>(state.range(0)), slee::Schedule::Dynamic};
  for (auto _ : state) benchmark::DoNotOptimize(slee::slee_batch(graphs, options));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_SleeBatchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CanonicalBatchSerial(benchmark::State& state) {
  const auto& graphs = universe10().graphs;
  for (auto _ : state) benchmark::DoNotOptimize(slee::canonical_batch_serial(graphs));
}
BENCHMARK(BM_CanonicalBatchSerial)->Unit(benchmark::kMillisecond);

void BM_CanonicalBatchParallel(benchmark::State& state) {
  const auto& graphs = universe10().graphs;
  const slee::ParallelOptions options{static_cast<int>(state.range(0)), slee::Schedule::Dynamic};
  for (auto _ : state) benchmark::DoNotOptimize(slee::canonical_batch(graphs, options));
}
BENCHMARK(BM_CanonicalBatchParallel)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slee::enumerate_unicyclic_serial(n));
}
BENCHMARK(BM_EnumerateSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slee::enumerate_unicyclic(n, {4, slee::Schedule::Dynamic}));
}
BENCHMARK(BM_EnumerateParallel)->Arg(9)->Arg(10)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_WalkCounts(benchmark::State& state) {
  const auto& g = universe10().graphs.back();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slee::walk_counts(g, k));
}
BENCHMARK(BM_WalkCounts)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
