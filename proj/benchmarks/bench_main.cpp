#include <benchmark/benchmark.h>

#include "chebydyn/operators.hpp"
#include "chebydyn/raster.hpp"
#include "chebydyn/verify.hpp"

namespace {

using namespace chebydyn;

void BM_ApplyS(benchmark::State& state) {
  const RationalMap s = build_S(RatioParam(Complex(0.6, 0.1)));
  SpherePoint z(Complex(0.3, 1.7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(s(z));
  }
}
BENCHMARK(BM_ApplyS);

void BM_ChebyshevStepFactored(benchmark::State& state) {
  const std::array<RootFactor, 2> roots = {RootFactor{Complex(1.0, 0.0), 3}, RootFactor{Complex(-1.0, 0.5), 1}};
  const Complex z(0.3, 1.7);
  for (auto _ : state) benchmark::DoNotOptimize(modified_chebyshev_step(roots, 3, z));
}
BENCHMARK(BM_ChebyshevStepFactored);

void BM_RenderPlane(benchmark::State& state) {
  const RenderRegion region = RenderRegion::make(-5, 5, -5, 5, int(state.range(0)), int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(render_dynamical_plane(RatioParam(0.6), region, OrbitConfig::make(50, 1e-20), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_RenderPlane)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RenderParam(benchmark::State& state) {
  const RenderRegion region = RenderRegion::make(-5, 5, -5, 5, 100, 100);
  for (auto _ : state)
    benchmark::DoNotOptimize(render_parameter_space(CriticalLabel::kC2, region, OrbitConfig::make(50, 1e-2), 1));
}
BENCHMARK(BM_RenderParam)->Unit(benchmark::kMillisecond);

void BM_RenderBasins(benchmark::State& state) {
  const RenderRegion region = RenderRegion::make(-5, 5, -5, 5, 200, 200);
  for (auto _ : state)
    benchmark::DoNotOptimize(render_basins_G(RatioParam(1.5), region, OrbitConfig::make(30, 1e-5), 1));
}
BENCHMARK(BM_RenderBasins)->Unit(benchmark::kMillisecond);

void BM_OracleSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle_suite());
}
BENCHMARK(BM_OracleSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
