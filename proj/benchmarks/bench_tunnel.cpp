#include <benchmark/benchmark.h>

#include "tunnel/asymptotics.hpp"
#include "tunnel/derivations.hpp"
#include "tunnel/oscillator.hpp"
#include "tunnel/quadrature.hpp"
#include "tunnel/specialfn.hpp"

namespace {

void BM_EvalPsi(benchmark::State& state) {
  const tunnel::OscillatorMode mode(state.range(0));
  const double x = mode.nu() + 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(tunnel::eval_psi(mode, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalPsi)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_TunnelExact(benchmark::State& state) {
  const tunnel::OscillatorMode mode(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tunnel::tunnel_probability_exact(mode));
}
BENCHMARK(BM_TunnelExact)->Arg(10)->Arg(100)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_TunnelAsym(benchmark::State& state) {
  const tunnel::OscillatorMode mode(800);
  // The coefficient tables are built on first use.
  benchmark::DoNotOptimize(tunnel::tunnel_probability_asym(mode, tunnel::ExpansionForm::eq41));
  for (auto _ : state) benchmark::DoNotOptimize(tunnel::tunnel_probability_asym(mode, tunnel::ExpansionForm::eq41));
}
BENCHMARK(BM_TunnelAsym);

void BM_Airy(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tunnel::airy_scaled(t));
    t = t > 30.0 ? 0.0 : t + 0.37;
  }
}
BENCHMARK(BM_Airy);

void BM_UniformPsi(benchmark::State& state) {
  const tunnel::OscillatorMode mode(400);
  for (auto _ : state) benchmark::DoNotOptimize(tunnel::uniform_psi_approx(mode, 1.5));
}
BENCHMARK(BM_UniformPsi);

void BM_DeriveA1(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tunnel::derive_a1_series(order));
}
BENCHMARK(BM_DeriveA1)->Arg(5)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
