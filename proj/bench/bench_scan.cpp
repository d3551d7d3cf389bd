#include <benchmark/benchmark.h>

#include <numbers>

#include "upst/constructors.hpp"
#include "upst/walk.hpp"

namespace {

upst::EigenSystem fixture(int which) {
  switch (which) {
    case 0: return upst::circulant_eigensystem(upst::nondense_circulant(2, 3));
    case 1: return upst::circulant_eigensystem(upst::nondense_circulant(3, 5));
    default: return upst::noncirculant_graph({4, 4, 2}).second;
  }
}

constexpr double kPeriod = 2 * std::numbers::pi;

void BM_ScanSerial(benchmark::State& state) {
  const upst::EigenSystem es = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(upst::scan_min_times_serial(es, 1.25 * kPeriod, kPeriod / 10000));
  state.SetLabel("n=" + std::to_string(es.n));
}

void BM_ScanParallel(benchmark::State& state) {
  const upst::EigenSystem es = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(upst::scan_min_times(es, 1.25 * kPeriod, kPeriod / 10000));
  state.SetLabel("n=" + std::to_string(es.n));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
