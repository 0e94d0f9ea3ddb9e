#include <benchmark/benchmark.h>

#include "sqm/cayley.hpp"
#include "sqm/enumeration.hpp"
#include "sqm/fixtures.hpp"
#include "sqm/fulfill.hpp"
#include "sqm/presentation.hpp"
#include "sqm/walls.hpp"

using namespace sqm;

static void BM_SamplePresentation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_presentation(n, 0.3, ++seed));
}
BENCHMARK(BM_SamplePresentation)->Arg(3)->Arg(8)->Arg(20);

static void BM_Shapes(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shapes_with_faces(k));
}
BENCHMARK(BM_Shapes)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DecoratedTwoFaces(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_abstract_complexes(2));
}
BENCHMARK(BM_DecoratedTwoFaces)->Unit(benchmark::kMillisecond);

static void BM_FulfillSearch(benchmark::State& state) {
  const auto complexes = enumerate_abstract_complexes(2);
  const Presentation p = sample_presentation(3, 0.3, 5);
  for (auto _ : state)
    for (const AbstractComplex& y : complexes) benchmark::DoNotOptimize(fulfill_search(y, p.relators));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(complexes.size()));
}
BENCHMARK(BM_FulfillSearch)->Unit(benchmark::kMillisecond);

static void BM_TorusBall(benchmark::State& state) {
  const Presentation t = torus_presentation();
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(t, r, default_budget(t)));
}
BENCHMARK(BM_TorusBall)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_WallsZ2(benchmark::State& state) {
  const Fixture f = z2_fixture(static_cast<int>(state.range(0)));
  const PaintedComplex p = paint(f.complex);
  for (auto _ : state) benchmark::DoNotOptimize(build_walls(p));
}
BENCHMARK(BM_WallsZ2)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_WindowSweep(benchmark::State& state) {
  const Fixture f = z2_fixture(11);
  const PaintedComplex p = paint(f.complex);
  const WallDecomposition w = build_walls(p, {HypergraphKind::standard});
  const int a = f.vertices.at("(-5,-5)"), b = f.vertices.at("(5,6)");
  for (auto _ : state) benchmark::DoNotOptimize(sweep_window_crossing(p.base, w, a, b));
}
BENCHMARK(BM_WindowSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
