#include <benchmark/benchmark.h>

#include "speclimit/criterion.hpp"
#include "speclimit/measurement.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/noise.hpp"
#include "speclimit/semiclassical.hpp"

using namespace speclimit;

static void BM_MorseAction(benchmark::State& state) {
  const ModelSpec m = preset("h2-morse");
  const double e = -4.7446 * static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(semiclassical::action(m, e));
}
BENCHMARK(BM_MorseAction)->Arg(99)->Arg(50)->Arg(1);

static void BM_MorsePeriod(benchmark::State& state) {
  const ModelSpec m = preset("h2-morse");
  for (auto _ : state) benchmark::DoNotOptimize(semiclassical::period_of_energy(m, -1.0));
}
BENCHMARK(BM_MorsePeriod);

static void BM_QuantizeMorse(benchmark::State& state) {
  const ModelSpec m = preset("h2-morse");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semiclassical::quantize(m, n, 2));
}
BENCHMARK(BM_QuantizeMorse)->Arg(0)->Arg(8)->Arg(16);

static void BM_YFunctionClosedForm(benchmark::State& state) {
  const ModelSpec h = preset("hydrogen");
  int n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(criterion::y_function(h, n));
    n = n < 1000 ? n + 1 : 2;
  }
}
BENCHMARK(BM_YFunctionClosedForm);

static void BM_YFunctionSemiclassical(benchmark::State& state) {
  const ModelSpec m = preset("h2-morse");
  criterion::Options o;
  o.source = criterion::LevelSource::Semiclassical;
  for (auto _ : state) benchmark::DoNotOptimize(criterion::y_function(m, 10, o));
}
BENCHMARK(BM_YFunctionSemiclassical);

static void BM_ThresholdScan(benchmark::State& state) {
  const ModelSpec h = preset("hydrogen");
  for (auto _ : state) benchmark::DoNotOptimize(criterion::threshold(h));
}
BENCHMARK(BM_ThresholdScan);

static void BM_ConsistencySweepBox(benchmark::State& state) {
  const ModelSpec b = preset("box");
  sim::PeriodProtocol p;
  p.trials = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sim::consistency_sweep(b, 2, 12, p));
}
BENCHMARK(BM_ConsistencySweepBox)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SampleEnsemble(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(noise::sample_ensemble(0.0, 1.0, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleEnsemble)->Arg(100000);

BENCHMARK_MAIN();
