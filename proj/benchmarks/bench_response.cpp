#include <benchmark/benchmark.h>

#include "btzharvest/oracle.hpp"
#include "btzharvest/sweep.hpp"

using namespace btzharvest;

namespace {

const Configuration& reference() {
    static const Configuration c = configure(ExperimentPoint{});
    return c;
}

void BM_SingularIntegral(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 100.0;
    const SingularKernelSpec spec{0.25, 0.1, alpha, PhaseMode::complex_exp, Branch::minus_i};
    const QuadratureSettings q;
    for (auto _ : state) benchmark::DoNotOptimize(singular_cosh_integral(spec, q));
}
BENCHMARK(BM_SingularIntegral)->Arg(1)->Arg(100)->Arg(600)->Arg(2000);

void BM_ThermalIntegral(benchmark::State& state) {
    const QuadratureSettings q;
    for (auto _ : state) benchmark::DoNotOptimize(thermal_gaussian_integral(1.0, 0.1, 0.159, q));
}
BENCHMARK(BM_ThermalIntegral);

void BM_Wightman(benchmark::State& state) {
    const Configuration& c = reference();
    const SpacetimePoint x{0.3, c.a.radius, 0.0};
    const SpacetimePoint y{0.0, c.b.radius, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(wightman_btz(c.spacetime, x, y, 0.01));
}
BENCHMARK(BM_Wightman);

void BM_TransitionProbability(benchmark::State& state) {
    const Configuration& c = reference();
    const QuadratureSettings q;
    for (auto _ : state) benchmark::DoNotOptimize(transition_probability(c.spacetime, c.a, q));
}
BENCHMARK(BM_TransitionProbability)->Unit(benchmark::kMicrosecond);

void BM_NonlocalX(benchmark::State& state) {
    const Configuration& c = reference();
    const QuadratureSettings q;
    for (auto _ : state) benchmark::DoNotOptimize(nonlocal_X(c.spacetime, c.a, c.b, q));
}
BENCHMARK(BM_NonlocalX)->Unit(benchmark::kMicrosecond);

void BM_SeparationSweep(benchmark::State& state) {
    SweepSpec s;
    s.axis = {"dAB_over_sigma", AxisScale::linear, 0.5, 10.0, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(s, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeparationSweep)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SuddenDeath(benchmark::State& state) {
    const QuadratureSettings q;
    for (auto _ : state) benchmark::DoNotOptimize(find_sudden_death(ExperimentPoint{}, 1e-3, 10.0, q));
}
BENCHMARK(BM_SuddenDeath)->Unit(benchmark::kMillisecond);

void BM_OracleP(benchmark::State& state) {
    const Configuration& c = reference();
    OracleSettings s;
    s.eps_values = {0.1, 0.05, 0.025};
    s.inner_rel_tol = 1e-8;
    s.outer_rel_tol = 1e-6;
    s.extrapolation_tol = 1e-2;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_P(c.spacetime, c.a, s));
}
BENCHMARK(BM_OracleP)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
