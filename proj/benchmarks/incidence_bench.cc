#include <benchmark/benchmark.h>

#include "multijoint/generators.h"
#include "multijoint/incidence.h"

namespace multijoint {
namespace {

void BM_GridMultijoints(benchmark::State& state) {
  const LineFamilies f = GridConfig(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Multijoints(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GridMultijoints)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_RandomIncidences(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const LineFamilies f = RandomConfig(l, l, l, 7);
  for (auto _ : state) benchmark::DoNotOptimize(BuildIncidences(f));
}
BENCHMARK(BM_RandomIncidences)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

// Transversal search at a single bush center with q = (k, k, k).
void BM_BushThreshold(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const LineFamilies f = MakeBushConfig(k, k, k, 1, 3).families;
  const ThresholdQuery q(k, k, k);
  for (auto _ : state) benchmark::DoNotOptimize(JThreshold(f, q));
}
BENCHMARK(BM_BushThreshold)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Subsample(benchmark::State& state) {
  const LineFamilies f = MakeBushConfig(2, 2, 2, 4, 5).families;
  const ThresholdQuery q(2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(SubsampleReduction(f, q, 200, 9));
}
BENCHMARK(BM_Subsample)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace multijoint
