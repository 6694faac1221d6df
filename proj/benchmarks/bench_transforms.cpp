#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "lcst/lcst.hpp"
#include "lcst/lct.hpp"

using namespace lcst;

namespace {

Signal test_signal(std::size_t n) {
  const double t0 = -8.0, dt = 16.0 / static_cast<double>(n);
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t0 + static_cast<double>(k) * dt;
    v[k] = std::exp(-0.5 * t * t) * std::polar(1.0, 3.0 * t);
  }
  return Signal(t0, dt, std::move(v));
}

void bm_lct_direct(benchmark::State& state) {
  const auto f = test_signal(static_cast<std::size_t>(state.range(0)));
  const auto m = sl2r_new(1, 1, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lct_forward(f, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_lct_direct)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void bm_lct_fast(benchmark::State& state) {
  const auto f = test_signal(static_cast<std::size_t>(state.range(0)));
  const auto m = sl2r_new(1, 1, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lct_forward_fast(f, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_lct_fast)->RangeMultiplier(2)->Range(256, 16384)->Complexity();

void bm_lcst_direct(benchmark::State& state) {
  const auto f = test_signal(512);
  const auto [m1, m2] = special_case(SpecialCase::Classical);
  const auto psi = WindowSpec::gaussian(1.0);
  const auto n_shifts = static_cast<std::size_t>(state.range(0));
  const auto grid =
      ScaleShiftGrid::make(0.5, 4.0, 16, -4.0, 4.0 - 8.0 / n_shifts, n_shifts);
  for (auto _ : state)
    benchmark::DoNotOptimize(lcst_forward(f, psi, m1, m2, grid));
}
BENCHMARK(bm_lcst_direct)->Arg(128)->Arg(256);

void bm_lcst_fast(benchmark::State& state) {
  const auto n_shifts = static_cast<std::size_t>(state.range(0));
  const auto f = test_signal(n_shifts);
  const auto [m1, m2] = special_case(SpecialCase::Classical);
  const auto psi = WindowSpec::gaussian(1.0);
  const auto grid = ScaleShiftGrid::make(
      0.5, 4.0, 16, f.t0(), f.t0() + (n_shifts - 1) * f.dt(), n_shifts);
  for (auto _ : state)
    benchmark::DoNotOptimize(lcst_forward_fast(f, psi, m1, m2, grid));
}
BENCHMARK(bm_lcst_fast)->Arg(512)->Arg(1024)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
