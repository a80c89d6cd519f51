#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "mfunc/averages.hpp"
#include "mfunc/char_function.hpp"
#include "mfunc/dirichlet_series.hpp"
#include "mfunc/inversion.hpp"
#include "mfunc/mdensity.hpp"
#include "mfunc/modular.hpp"
#include "mfunc/primes.hpp"
#include "mfunc/torus.hpp"
#include "mfunc/zeta.hpp"

using namespace mfunc;

static void BM_ZetaEulerMaclaurin(benchmark::State& state) {
  const double t = double(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_eval(0.75, t));
}
BENCHMARK(BM_ZetaEulerMaclaurin)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_LogZetaLine(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(log_zeta_line(1.5, 0.0, 100.0, 0.01));
  state.SetItemsProcessed(state.iterations() * 10001);
}
BENCHMARK(BM_LogZetaLine)->Unit(benchmark::kMillisecond);

static void BM_CharFunctionP(benchmark::State& state) {
  const auto P = first_primes(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_function_P(P, 1.0, {7.0, -3.0}));
}
BENCHMARK(BM_CharFunctionP)->Arg(4)->Arg(10)->Arg(25);

static void BM_Density(benchmark::State& state) {
  const auto P = first_primes(10);
  const auto method = state.range(1) ? DensityMethod::CurveConvolution : DensityMethod::FourierInversion;
  const auto grid = default_density_grid(P, 1.0, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m_sigma_P(P, 1.0, grid, method));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Density)->Args({128, 0})->Args({256, 0})->Args({128, 1})->Args({256, 1})->Unit(benchmark::kMillisecond);

static void BM_GaussianInversion(benchmark::State& state) {
  GridSpec grid;
  grid.resolution = int(state.range(0));
  grid.half_width = 8.0;
  const auto c = tabulate_char_function([](Complex z) { return std::exp(-0.5 * std::norm(z)); }, dual_char_grid(grid));
  for (auto _ : state) benchmark::DoNotOptimize(invert_char_function(c, grid));
}
BENCHMARK(BM_GaussianInversion)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_TorusHistogram(benchmark::State& state) {
  const auto P = first_primes(10);
  const auto grid = default_density_grid(P, 1.0, 256);
  const auto n = std::size_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torus_histogram(P, 1.0, n, 1, grid));
  state.SetItemsProcessed(state.iterations() * std::int64_t(n));
}
BENCHMARK(BM_TorusHistogram)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_LambdaCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lambda_coefficients({2.0, 1.0}, state.range(0)));
}
BENCHMARK(BM_LambdaCoefficients)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

static void BM_SmoothSeries(benchmark::State& state) {
  const auto P = primes_up_to(20);
  for (auto _ : state) benchmark::DoNotOptimize(mtilde_dirichlet(1.5, {3.0, 4.0}, state.range(0), P));
}
BENCHMARK(BM_SmoothSeries)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMicrosecond);

static void BM_ModulusAverage(benchmark::State& state) {
  const auto P = make_prime_list({2, 3, 5});
  const auto phi = TestFunction::gaussian({0.2, 0.0}, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(modulus_average(state.range(0), P, 1.0, phi));
}
BENCHMARK(BM_ModulusAverage)->Arg(101)->Arg(1009)->Unit(benchmark::kMicrosecond);

static void BM_RamanujanTau(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ramanujan_tau_table(state.range(0)));
}
BENCHMARK(BM_RamanujanTau)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
