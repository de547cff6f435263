#include <benchmark/benchmark.h>

#include "multijoint/curvegeom.h"
#include "multijoint/generators.h"
#include "multijoint/rng.h"

namespace multijoint {
namespace {

void BM_CurveCurveIntersections(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  Rng rng(21);
  const ParamCurve c1 = RandomCurve(rng, b), c2 = RandomCurve(rng, b);
  for (auto _ : state) benchmark::DoNotOptimize(CurveCurveIntersections(c1, c2));
}
BENCHMARK(BM_CurveCurveIntersections)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_LinesAsCurvesMultijoints(benchmark::State& state) {
  const CurveFamilies f = LinesAsCurves(GridConfig(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(CurveMultijoints(f));
}
BENCHMARK(BM_LinesAsCurvesMultijoints)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace multijoint
