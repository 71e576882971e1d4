#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "qdx/cli/sweep.hpp"
#include "qdx/oracle.hpp"
#include "qdx/twisting.hpp"
#include "qdx/xstate.hpp"

namespace {

using namespace qdx;
using std::numbers::pi;

const TwoQubitXState& golden() {
  static const auto s = twisting_state({12, 0.1 * pi});
  return s;
}

void BM_QuantumDiscord(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quantum_discord(golden()));
}
BENCHMARK(BM_QuantumDiscord);

void BM_Gmqd(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gmqd(golden()));
}
BENCHMARK(BM_Gmqd);

void BM_EvaluatePoint(benchmark::State& state) {
  double g = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cli::evaluate_point(ChannelKind::AmplitudeDamping, {12, 0.1 * pi}, g));
    g = g > 5.0 ? 0.0 : g + 0.05;
  }
}
BENCHMARK(BM_EvaluatePoint);

void BM_DiscordBruteforce(benchmark::State& state) {
  const oracle::GridSpec grid{static_cast<int>(state.range(0)), 3, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::discord_bruteforce(golden(), grid));
}
BENCHMARK(BM_DiscordBruteforce)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ExactReducedState(benchmark::State& state) {
  const TwistingParams p{static_cast<int>(state.range(0)), 0.1 * pi};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exact_reduced_state(p));
}
BENCHMARK(BM_ExactReducedState)->Arg(6)->Arg(12)->Arg(20);

void BM_ExactReducedStateFull(benchmark::State& state) {
  const TwistingParams p{static_cast<int>(state.range(0)), 0.1 * pi};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exact_reduced_state_full(p));
}
BENCHMARK(BM_ExactReducedStateFull)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_SweepFig1(benchmark::State& state) {
  const auto spec = *cli::preset("fig1");
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_sweep(spec, 1));
}
BENCHMARK(BM_SweepFig1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
