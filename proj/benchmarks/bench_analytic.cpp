#include <benchmark/benchmark.h>

#include "diracwv/evolution.hpp"
#include "diracwv/pairprod.hpp"
#include "diracwv/scattering.hpp"
#include "diracwv/weakvalue.hpp"

using namespace diracwv;

namespace {

void BM_Transmission(benchmark::State& state) {
    for (auto _ : state) {
        auto sol = transmission(2.0, 5.0, 1.0);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_Transmission);

void BM_BoundaryMatch(benchmark::State& state) {
    for (auto _ : state) {
        auto sol = boundary_match(2.0, 5.0, 1.0);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_BoundaryMatch);

void BM_StepWeakValue(benchmark::State& state) {
    for (auto _ : state) {
        auto w = step_weak_value(2.0, 5.0, 1.0, Regime::supercritical_transmission);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_StepWeakValue);

void BM_PairRate(benchmark::State& state) {
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto r = pair_rate(5.0, 1.0, tol);
        benchmark::DoNotOptimize(r);
        state.counters["evals"] = static_cast<double>(r.evaluations);
    }
}
BENCHMARK(BM_PairRate)->Arg(6)->Arg(8)->Arg(10);

void BM_TrotterPropagator(benchmark::State& state) {
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto u = trotter_propagator(1.0, 1.0, 1.0, steps);
        benchmark::DoNotOptimize(u);
    }
    state.SetComplexityN(steps);
}
BENCHMARK(BM_TrotterPropagator)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SeriesCoefficient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = series_coefficient(n, 0.5, 1.0);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesCoefficient)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
