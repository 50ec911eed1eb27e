#include <vector>

#include <benchmark/benchmark.h>

#include "ruin/devylder.hpp"
#include "ruin/lundberg.hpp"
#include "ruin/montecarlo.hpp"

namespace {

using namespace ruin;

RiskModel erlang_model() {
  return RiskModel(10, 4, DistributionSpec(Erlang{3, 2.0}), DistributionSpec(Erlang{2, 0.5}));
}
RiskModel hyper_model() {
  return RiskModel(10, 4, DistributionSpec(Hyperexponential{{{0.4, 0.5}, {0.3, 2.0}, {0.3, 4.0}}}),
                   DistributionSpec(Hyperexponential{{{0.75, 0.4}, {0.25, 0.8}}}));
}

void BM_AdjustmentCoefficient(benchmark::State& state) {
  const auto model = state.range(0) == 0 ? erlang_model() : hyper_model();
  for (auto _ : state) benchmark::DoNotOptimize(adjustment_coefficient(model));
}
BENCHMARK(BM_AdjustmentCoefficient)->Arg(0)->Arg(1);

void BM_DevylderParams(benchmark::State& state) {
  const auto model = hyper_model();
  for (auto _ : state) benchmark::DoNotOptimize(devylder_params(model));
}
BENCHMARK(BM_DevylderParams);

void BM_GridSimulation(benchmark::State& state) {
  const auto model = state.range(0) == 0 ? erlang_model() : hyper_model();
  const std::vector<double> xs{0, 1, 2, 5, 10};
  const GridPlan plan{.n_paths = 10'000, .seed = 1, .headroom = default_headroom(model),
                      .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ruin_grid(model, xs, plan));
  state.SetItemsProcessed(state.iterations() * plan.n_paths);
}
BENCHMARK(BM_GridSimulation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
