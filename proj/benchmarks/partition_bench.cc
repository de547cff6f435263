#include <benchmark/benchmark.h>

#include <vector>

#include "multijoint/partition.h"
#include "multijoint/rng.h"

namespace multijoint {
namespace {

std::vector<Point3> RandomPoints(int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<Point3> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back({Rational(rng.UniformRange(-50, 50)), Rational(rng.UniformRange(-50, 50)),
                   Rational(rng.UniformRange(-50, 50))});
  }
  return pts;
}

void BM_BisectSets(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<Point3> pts = RandomPoints(64, 3);
  std::vector<std::vector<Point3>> sets(LiftDimension(d));
  for (size_t i = 0; i < pts.size(); ++i) sets[i % sets.size()].push_back(pts[i]);
  uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(BisectSets(sets, d, Frac(1, 10), ++seed));
}
BENCHMARK(BM_BisectSets)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_GkPartition(benchmark::State& state) {
  const std::vector<Point3> pts = RandomPoints(static_cast<int>(state.range(0)), 11);
  const int rounds = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(GkPartition(pts, rounds, Frac(1, 10), 5));
}
BENCHMARK(BM_GkPartition)
    ->ArgsProduct({{64, 256}, {3, 5}})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace
}  // namespace multijoint
