#include <benchmark/benchmark.h>

#include "diracwv/lattice.hpp"

using namespace diracwv;
using namespace diracwv::lattice;

namespace {

LatticeConfig bench_config(int n_sites) {
    LatticeConfig cfg;
    cfg.n_sites = n_sites;
    cfg.dx = 0.02;
    cfg.m = 1.0;
    cfg.potential = PotentialProfile::step(5.0, 0.0);
    return cfg;
}

PacketSpec bench_packet(const LatticeConfig& cfg) {
    PacketSpec spec;
    spec.sigma = 5.0 * cfg.dx;
    spec.x0 = cfg.length() / 4.0;
    spec.p0 = 2.8284271247461903;
    spec.energy_sign = -1;
    return spec;
}

void BM_LatticeStep(benchmark::State& state) {
    const LatticeConfig cfg = bench_config(static_cast<int>(state.range(0)));
    LatticeState st = make_packet(bench_packet(cfg), cfg);
    for (auto _ : state) {
        advance(st);
        benchmark::DoNotOptimize(st.upper.data());
    }
    state.SetItemsProcessed(state.iterations() * cfg.n_sites);
    state.SetComplexityN(cfg.n_sites);
}
BENCHMARK(BM_LatticeStep)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

void BM_MakePacket(benchmark::State& state) {
    const LatticeConfig cfg = bench_config(static_cast<int>(state.range(0)));
    const PacketSpec spec = bench_packet(cfg);
    for (auto _ : state) {
        auto st = make_packet(spec, cfg);
        benchmark::DoNotOptimize(st.upper.data());
    }
}
BENCHMARK(BM_MakePacket)->Arg(4096)->Arg(16384);

void BM_MomentumCentroid(benchmark::State& state) {
    const LatticeConfig cfg = bench_config(static_cast<int>(state.range(0)));
    const LatticeState st = make_packet(bench_packet(cfg), cfg);
    for (auto _ : state) {
        const double k = momentum_centroid(st, cfg.x_min(), cfg.length());
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_MomentumCentroid)->Arg(4096)->Arg(16384);

}  // namespace
