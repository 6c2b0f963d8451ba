#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "losq/fock.hpp"
#include "losq/gaussian.hpp"
#include "losq/operator_expr.hpp"
#include "losq/witness.hpp"

namespace {

using namespace losq;

void BM_HomodyneVariance(benchmark::State& state) {
  const TwoModeProduct s{make_state({.zeta = 0.3, .nbar = 0.2, .alpha = {1.0, 0.5}}),
                         make_state({.zeta = -0.2, .phi = 0.4, .alpha = 2.0})};
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(homodyne_variance(s, theta));
    theta += 1e-3;
  }
}
BENCHMARK(BM_HomodyneVariance);

void BM_OptimalTheta(benchmark::State& state) {
  const TwoModeProduct s{squeezed_vacuum(zeta_from_db(3.0)), coherent_state(std::sqrt(10.0))};
  for (auto _ : state) benchmark::DoNotOptimize(optimal_theta(s));
}
BENCHMARK(BM_OptimalTheta);

void BM_ReorderHomodyneSquare(benchmark::State& state) {
  const OperatorExpr l = homodyne_observable(0.7);
  const OperatorExpr l2 = l * l;
  for (auto _ : state) benchmark::DoNotOptimize(reorder(l2));
}
BENCHMARK(BM_ReorderHomodyneSquare);

void BM_FormalNormalOrderQuartic(benchmark::State& state) {
  const OperatorExpr l = homodyne_observable(0.7);
  const OperatorExpr l4 = (l * l) * (l * l);
  for (auto _ : state) benchmark::DoNotOptimize(formal_normal_order(l4, {Mode::A}));
}
BENCHMARK(BM_FormalNormalOrderQuartic);

void BM_FockStatePure(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const StateParams si{.zeta = 0.3, .alpha = 1.0};
  const StateParams lo{.zeta = zeta_from_db(3.0)};
  for (auto _ : state) benchmark::DoNotOptimize(fock_state(si, lo, cutoff, 1.0));
}
BENCHMARK(BM_FockStatePure)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FockStateMixed(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const StateParams si{.zeta = 0.3, .nbar = 0.5, .alpha = 1.0};
  const StateParams lo{.nbar = 0.2, .alpha = 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(fock_state(si, lo, cutoff, 1.0));
}
BENCHMARK(BM_FockStateMixed)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ExpectHomodyneSquare(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockState s = fock_state({.zeta = 0.3, .alpha = 1.0}, {.zeta = zeta_from_db(3.0)}, cutoff, 1.0);
  const OperatorExpr l = homodyne_observable(0.7);
  const OperatorExpr l2 = l * l;
  for (auto _ : state) benchmark::DoNotOptimize(expect(l2, s));
}
BENCHMARK(BM_ExpectHomodyneSquare)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
