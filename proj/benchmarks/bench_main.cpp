#include <benchmark/benchmark.h>

#include <vector>

#include "hglens/dephasing.hpp"
#include "hglens/lens_metrics.hpp"
#include "hglens/modes.hpp"
#include "hglens/superposition.hpp"

using namespace hglens;

static void BM_HermiteFns(benchmark::State& state) {
  std::vector<double> out(static_cast<std::size_t>(state.range(0)) + 1);
  double xi = 0.37;
  for (auto _ : state) {
    hermite_fns(xi, out);
    benchmark::DoNotOptimize(out.data());
    xi += 1e-9;
  }
}
BENCHMARK(BM_HermiteFns)->Arg(8)->Arg(64)->Arg(256);

static void BM_SolveCoefficients(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_coefficients(j));
}
BENCHMARK(BM_SolveCoefficients)->Arg(2)->Arg(16)->Arg(27);

static void BM_IntegratedIntensity(benchmark::State& state) {
  const auto s = solve_coefficients(static_cast<int>(state.range(0)));
  const auto g = BeamGeometry::reduced(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(integrated_intensity(s, 0.8, 3.0, g));
}
BENCHMARK(BM_IntegratedIntensity)->Arg(0)->Arg(16)->Arg(27);

static void BM_DeviationMark(benchmark::State& state) {
  const auto s = solve_coefficients(static_cast<int>(state.range(0)));
  const auto g = BeamGeometry::reduced();
  for (auto _ : state) benchmark::DoNotOptimize(deviation_mark(s, g));
}
BENCHMARK(BM_DeviationMark)->Arg(0)->Arg(16);

static void BM_Table1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table1(33));
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

static void BM_FindZmin(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_zmin(j));
}
BENCHMARK(BM_FindZmin)->Arg(1)->Arg(27)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
