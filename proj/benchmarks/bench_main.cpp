#include <benchmark/benchmark.h>

#include "fano64/elimination.hpp"
#include "fano64/toric.hpp"
#include "fano64/wps.hpp"

using namespace fano64;

static void BM_SurfaceSweep(benchmark::State& state) {
  const auto chis = elim::default_chi_window();
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& base : elim::surface_bases()) n += elim::run_section8_elimination(chis, base).size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SurfaceSweep)->Unit(benchmark::kMillisecond);

static void BM_X66PolytopeDegree(benchmark::State& state) {
  const auto fan = toric::x66_printed_fan();
  for (auto _ : state) benchmark::DoNotOptimize(toric::polytope_degree(toric::anticanonical_polytope(fan)));
}
BENCHMARK(BM_X66PolytopeDegree);

static void BM_ValidateFan(benchmark::State& state) {
  const auto fan = toric::p1_cubed_fan();
  for (auto _ : state) benchmark::DoNotOptimize(toric::validate_fan(fan).clean());
}
BENCHMARK(BM_ValidateFan);

static void BM_WpsGrid(benchmark::State& state) {
  for (auto _ : state) {
    Rational total;
    for (int a = 1; a <= 12; ++a) {
      for (int b = 1; b <= a; ++b) {
        std::array<Integer, 4> w{a, b, 1, 1};
        if (wps::is_well_formed(w)) total += wps::wps_degree(wps::Weights(w));
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_WpsGrid);

static void BM_Reproduce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(elim::reproduce().ok());
}
BENCHMARK(BM_Reproduce)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
