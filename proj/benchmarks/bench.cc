#include <benchmark/benchmark.h>

#include <array>
#include <complex>

#include "markoff/cubic.hpp"
#include "markoff/markoff_map.hpp"
#include "markoff/verify.hpp"

namespace {

using markoff::MarkoffMap;
using markoff::MarkoffTriple;
using markoff::MuParams;

// memo-cold evaluation of a deep region on the classic map; the integer
// fan grows slowly enough (factor ~2.62 per step) to stay under 1e300
void BM_region_value(benchmark::State& state) {
  const markoff::Slope deep = markoff::make_slope(400, 1);
  for (auto _ : state) {
    MarkoffMap map(MuParams{0.0, 0.0, 0.0, 0.0}, MarkoffTriple{3.0, 3.0, 3.0});
    benchmark::DoNotOptimize(map.region_value(deep));
  }
}
BENCHMARK(BM_region_value);

void BM_solve_cubic(benchmark::State& state) {
  double wobble = 0.0;
  for (auto _ : state) {
    wobble += 1e-9;
    auto roots = markoff::solve_monic_cubic({-3.0, wobble}, {0.0, 0.0},
                                            {54.0, wobble});
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_solve_cubic);

void BM_trace_reduce(benchmark::State& state) {
  // precompute a start triangle 24 steps from the sink
  MarkoffMap walk(MuParams{0.0, 0.0, 0.0, 0.0}, MarkoffTriple{3.0, 3.0, 3.0});
  markoff::Triangle start = markoff::base_triangle();
  for (int i = 0; i < 24; ++i) {
    const std::array<markoff::NeighborStep, 3> steps =
        markoff::triangle_neighbors(start);
    const markoff::NeighborStep* pick = nullptr;
    double pick_mod = 0.0;
    for (const markoff::NeighborStep& step : steps) {
      double inside = std::abs(walk.region_value(step.removed));
      double outside = std::abs(walk.region_value(step.added));
      if (outside <= inside) continue;
      if (!pick || outside < pick_mod) {
        pick = &step;
        pick_mod = outside;
      }
    }
    start = pick->triangle;
  }
  for (auto _ : state) {
    MarkoffMap map(MuParams{0.0, 0.0, 0.0, 0.0}, MarkoffTriple{3.0, 3.0, 3.0});
    benchmark::DoNotOptimize(markoff::trace_reduce(map, start, 10000));
  }
}
BENCHMARK(BM_trace_reduce);

// one deterministic sampling chunk of the complex sink verifier
void BM_verify_chunk(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        markoff::verify_complex_sink_constant(0.0, 4096, 1, 1));
  }
}
BENCHMARK(BM_verify_chunk);

}  // namespace

BENCHMARK_MAIN();
