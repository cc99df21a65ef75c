#include <benchmark/benchmark.h>

#include "hhm/model.hpp"
#include "hhm/radial_ode.hpp"
#include "hhm/special.hpp"
#include "hhm/transform.hpp"

namespace {

const hhm::ModelParams kModel(3, 2.0, 2.0);

void BM_SphericalFunction(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hhm::spherical_function(kModel, 1.0, r));
}
BENCHMARK(BM_SphericalFunction)->Arg(1)->Arg(2)->Arg(5);

void BM_SolveEigenOde(benchmark::State& state) {
  const double r_max = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hhm::solve_eigen_ode(kModel, 1.0, r_max, 1e-3));
}
BENCHMARK(BM_SolveEigenOde)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SphericalFourierBump(benchmark::State& state) {
  const hhm::RadialProfile bump = hhm::bump_profile(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(hhm::spherical_fourier(kModel, bump, 1.0, 1e-10));
}
BENCHMARK(BM_SphericalFourierBump)->Unit(benchmark::kMillisecond);

void BM_LogBallVolume(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hhm::log_ball_volume(kModel, 40.0, 1e-12));
}
BENCHMARK(BM_LogBallVolume)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
