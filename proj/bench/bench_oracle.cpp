#include <benchmark/benchmark.h>

#include "polymod/oracle.hpp"
#include "polymod/pentomino.hpp"
#include "polymod/scmap.hpp"

namespace {

using polymod::Execution;

void BM_GridModule(benchmark::State& state, Execution exec) {
  const auto q = polymod::pentomino_quadrilateral(2.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polymod::grid_module(q, n, exec));
  }
  state.SetLabel("P_2, n=" + std::to_string(n));
}

void BM_TraceBoundary(benchmark::State& state, Execution exec) {
  const auto spec = polymod::build_sc_pent(polymod::solve_pentomino(2.0));
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polymod::trace_boundary(spec, samples, exec));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_GridModule, serial, Execution::serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GridModule, openmp, Execution::parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceBoundary, serial, Execution::serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceBoundary, openmp, Execution::parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
