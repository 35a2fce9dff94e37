#include <benchmark/benchmark.h>

#include "mfi/fisher.hpp"
#include "mfi/oscillator.hpp"
#include "mfi/variational.hpp"

namespace {

using namespace mfi;

void BM_EigenstateOnGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OscillatorParams params{1.0, 0.0};
  const Grid grid = default_grid_for(params, n);
  for (auto _ : state) {
    GridFunction psi = eigenstate_on_grid(n, params, grid);
    benchmark::DoNotOptimize(psi.values.data());
  }
}
BENCHMARK(BM_EigenstateOnGrid)->Arg(2)->Arg(20)->Arg(64);

void BM_FourierTransform(benchmark::State& state) {
  const OscillatorParams params{1.0, 0.0};
  const Grid grid = default_grid_for(params, 4, static_cast<int>(state.range(0)));
  const GridFunction psi = eigenstate_on_grid(4, params, grid);
  for (auto _ : state) {
    GridFunction ft = fourier_transform(psi);
    benchmark::DoNotOptimize(ft.values.data());
  }
}
BENCHMARK(BM_FourierTransform)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_FisherOfAmplitude(benchmark::State& state) {
  const OscillatorParams params{1.0, 0.0};
  const Grid grid = default_grid_for(params, 8);
  const GridFunction psi = eigenstate_on_grid(8, params, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fisher_of_amplitude(psi));
  }
}
BENCHMARK(BM_FisherOfAmplitude);

void BM_DiscreteSpectrum(benchmark::State& state) {
  const Grid grid{-12.0, 12.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto pairs = discrete_spectrum(grid, 1.0, 0.0, 6);
    benchmark::DoNotOptimize(pairs.front().epsilon);
  }
}
BENCHMARK(BM_DiscreteSpectrum)->Arg(512)->Arg(2048);

void BM_SolveMfi(benchmark::State& state) {
  const Grid grid{-10.0, 10.0, static_cast<int>(state.range(0))};
  const ConstraintSet constraints{1.0, 0.0, 0.5};
  for (auto _ : state) {
    GridFunction psi = solve_mfi(constraints, grid, 0);
    benchmark::DoNotOptimize(psi.values.data());
  }
}
BENCHMARK(BM_SolveMfi)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
