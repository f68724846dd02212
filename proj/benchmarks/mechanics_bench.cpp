#include <benchmark/benchmark.h>

#include "padicmech/mechanics/flow.hpp"
#include "padicmech/mechanics/potential.hpp"

using namespace padicmech;
using namespace padicmech::mechanics;

namespace {

void BM_ClosedFlowSeries(benchmark::State& state) {
  const auto m = PadicNumber::from_integer(1, 5, 12), beta = PadicNumber::from_integer(5, 5, 12);
  const auto z0 = PhaseState::from_rationals(5, 12, {1}, {1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_flow_series({FlowKind::HookeExp, m, beta}, z0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ClosedFlowSeries)->Arg(12)->Arg(24);

void BM_TaylorHooke(benchmark::State& state) {
  const auto m = PadicNumber::from_integer(1, 5, 12), beta = PadicNumber::from_integer(5, 5, 12);
  const auto h = HamiltonianSpec::standard(FlowKind::HookeTrig, {m}, beta);
  const auto z0 = PhaseState::from_rationals(5, 12, {1}, {1});
  for (auto _ : state) benchmark::DoNotOptimize(taylor_integrate(h, z0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TaylorHooke)->Arg(12)->Arg(24);

void BM_TaylorTwoBody(benchmark::State& state) {
  const std::uint32_t p = 7;
  const auto V = potential_build(PotentialKind::Democratic, analysis::Series::from_rationals(p, 12, {0, 0, 1, 0, 1}), 2);
  const auto h = HamiltonianSpec::with_masses({PadicNumber::from_integer(1, p, 12), PadicNumber::from_integer(2, p, 12)},
                                              V.potential);
  const auto z0 = PhaseState::from_rationals(p, 12, {7, 0}, {1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(taylor_integrate(h, z0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TaylorTwoBody)->Arg(8)->Arg(12);

}  // namespace
