// Serial reference path vs OpenMP path for the grid kernels. The second
// benchmark argument selects the path: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "lgeom/bertrand.hpp"
#include "lgeom/identities.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/registry.hpp"

using namespace lgeom;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::Serial : Exec::Parallel;
}

const SphericalCurve& generator() {
  static const SphericalCurve f = warped(2.0);
  return f;
}

const SlopeParams& params() {
  static const SlopeParams sp = SlopeParams::from_angle(std::numbers::pi / 3, 1.5);
  return sp;
}

void BM_FrenetSweep(benchmark::State& state) {
  const ParamCurve g = bertrand_curve(params(), generator());
  const auto grid = num::linspace(-0.6, 0.6, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frenet_sweep(g, grid, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Synthesize(benchmark::State& state) {
  const auto grid = num::linspace(-0.6, 0.6, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_synthesized(params(), generator(), grid, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SurfaceMesh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface_mesh(std::numbers::pi / 4, generator(), {0.5, 2.5},
                                          {-0.6, 0.6}, n, 2 * n, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2 * state.range(0));
}

void BM_Evolute(benchmark::State& state) {
  const auto grid = num::linspace(-0.8, 0.8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_evolute(generator(), grid, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CrossResiduals(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  std::vector<Triple> batch(static_cast<std::size_t>(state.range(0)));
  for (auto& t : batch) {
    for (auto& v : t) v = {d(rng), d(rng), d(rng)};
  }
  for (auto _ : state) benchmark::DoNotOptimize(cross_residuals(batch, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_FrenetSweep)->ArgsProduct({{256, 4096}, {0, 1}});
BENCHMARK(BM_Synthesize)->ArgsProduct({{64, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceMesh)->ArgsProduct({{32, 128}, {0, 1}});
BENCHMARK(BM_Evolute)->ArgsProduct({{256, 4096}, {0, 1}});
BENCHMARK(BM_CrossResiduals)->ArgsProduct({{10000, 100000}, {0, 1}});

BENCHMARK_MAIN();
