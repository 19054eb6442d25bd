#include <benchmark/benchmark.h>

#include "illiqdep/adaptive.hpp"
#include "illiqdep/montecarlo.hpp"
#include "illiqdep/stationary.hpp"

using namespace illiqdep;

namespace {

BinarySeries sample(std::size_t n) {
    CounterRng rng = CounterRng::substream(1, 0);
    return simulate_series(dgp::IndepPath{case2_path()}, n, rng);
}

void BM_KernelEstimate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = sample(n);
    const auto spec = KernelSpec::rate_default(n, kDefaultBandwidthConstant);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_probability(s, spec));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KernelEstimate)->Arg(200)->Arg(800)->Arg(3200)->Arg(12800)->Complexity();

void BM_StationaryProfile(benchmark::State& state) {
    const auto s = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dependence_profile_stationary(s, 60));
}
BENCHMARK(BM_StationaryProfile)->Arg(800)->Arg(3200);

void BM_FeasibleProfile(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = sample(n);
    const auto est = estimate_probability(s, KernelSpec::rate_default(n, kDefaultBandwidthConstant));
    for (auto _ : state) benchmark::DoNotOptimize(profile_feasible(s, est, 60));
}
BENCHMARK(BM_FeasibleProfile)->Arg(800)->Arg(3200);

void BM_Experiment(benchmark::State& state) {
    SimulationSpec spec;
    spec.model = dgp::IndepPath{case2_path()};
    spec.n = 800;
    spec.replications = 100;
    spec.tests = {TestKind::Q, TestKind::QOracle, TestKind::QFeasible};
    const auto workers = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(spec, workers));
}
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
