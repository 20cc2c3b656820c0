#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diracwv/lattice.hpp"

using namespace diracwv;
using namespace diracwv::lattice;

namespace {

LatticeConfig free_config(int n_sites, double dx, double m) {
    LatticeConfig cfg;
    cfg.n_sites = n_sites;
    cfg.dx = dx;
    cfg.m = m;
    cfg.potential = PotentialProfile::none();
    cfg.boundary = Boundary::periodic();
    return cfg;
}

double centroid_velocity(const LatticeConfig& cfg, const PacketSpec& spec, int steps) {
    LatticeState st = make_packet(spec, cfg);
    const double x0 = st.centroid();
    for (int s = 0; s < steps; ++s) {
        advance(st);
    }
    return (st.centroid() - x0) / (steps * cfg.eps());
}

}  // namespace

TEST_CASE("massless walk is a rigid one-site translation") {
    const LatticeConfig cfg = free_config(256, 0.05, 0.0);
    PacketSpec spec;
    spec.x0 = 0.0;
    spec.sigma = 0.5;
    spec.p0 = 10.0;
    spec.branch = Branch::plus;
    spec.energy_sign = +1;  // upper component, right mover

    const LatticeState initial = make_packet(spec, cfg);
    LatticeState st = initial;
    const int hops = 7;
    for (int s = 0; s < hops; ++s) {
        advance(st);
    }
    const int n = cfg.n_sites;
    for (int j = 0; j < n; ++j) {
        CHECK(st.upper[j] == initial.upper[(j - hops + n) % n]);
        CHECK(st.lower[j] == Complex{0.0, 0.0});
    }

    spec.energy_sign = -1;  // lower component, left mover
    const LatticeState initial_lo = make_packet(spec, cfg);
    LatticeState lo = initial_lo;
    for (int s = 0; s < hops; ++s) {
        advance(lo);
    }
    for (int j = 0; j < n; ++j) {
        CHECK(lo.lower[j] == initial_lo.lower[(j + hops) % n]);
        CHECK(lo.upper[j] == Complex{0.0, 0.0});
    }
}

TEST_CASE("norm is conserved over 1e4 steps under periodic boundaries") {
    const LatticeConfig cfg = free_config(512, 0.05, 1.0);
    PacketSpec spec;
    spec.x0 = 0.0;
    spec.sigma = 0.6;
    spec.p0 = 1.0;
    LatticeState st = make_packet(spec, cfg);
    double prev = st.norm2();
    double max_drift = 0.0;
    for (int s = 0; s < 10000; ++s) {
        advance(st);
        if (s < 100) {
            const double cur = st.norm2();
            max_drift = std::max(max_drift, std::abs(cur - prev));
            prev = cur;
        }
    }
    CHECK(max_drift < 1e-12);
    CHECK(std::abs(st.norm2() - 1.0) < 1e-10);
}

TEST_CASE("make_packet: unit norm, stationary rest packet") {
    const LatticeConfig cfg = free_config(2048, 0.02, 1.0);
    PacketSpec spec;
    spec.x0 = 1.5;
    spec.sigma = 0.5;
    spec.p0 = 0.7;
    CHECK(std::abs(make_packet(spec, cfg).norm2() - 1.0) < 1e-12);

    spec.p0 = 0.0;
    spec.x0 = 0.0;
    spec.sigma = 1.0;
    const LatticeState rest = make_packet(spec, cfg);
    double flux_sum = 0.0;
    for (int j = 0; j < cfg.n_sites; ++j) {
        flux_sum += std::norm(rest.upper[j]) - std::norm(rest.lower[j]);
    }
    CHECK(std::abs(flux_sum * cfg.dx) < 1e-12);  // <sigma_z> = 0 at rest
    LatticeState st = rest;
    for (int s = 0; s < 100; ++s) {
        advance(st);
    }
    CHECK(std::abs(st.centroid() - rest.centroid()) < 0.02);
}

TEST_CASE("free massive dispersion: centroid velocity matches p/E within 1%") {
    const LatticeConfig cfg = free_config(16384, 0.02, 1.0);
    for (const double p : {0.5, 1.0, 2.0}) {
        PacketSpec spec;
        spec.x0 = 0.0;
        spec.sigma = 11.0;
        spec.p0 = p;
        spec.branch = Branch::plus;
        spec.energy_sign = +1;
        const double v = centroid_velocity(cfg, spec, 500);
        const double expect = p / std::hypot(p, 1.0);
        CHECK(std::abs(v - expect) / expect < 0.01);
    }
}

TEST_CASE("negative-energy carrier moves against its momentum") {
    const LatticeConfig cfg = free_config(4096, 0.02, 1.0);
    PacketSpec spec;
    spec.x0 = 0.0;
    spec.sigma = 2.0;
    spec.p0 = 2.8284271247461903;  // E = -3 carrier
    spec.branch = Branch::plus;
    spec.energy_sign = -1;
    const double v = centroid_velocity(cfg, spec, 100);
    CHECK(v == doctest::Approx(-0.9428090415820635).epsilon(0.01));
}

TEST_CASE("measure_flux on bare sites") {
    LatticeState st;
    st.config = free_config(64, 0.1, 1.0);
    st.upper.assign(64, Complex{});
    st.lower.assign(64, Complex{});
    st.upper[32] = Complex{0.6, 0.0};
    st.lower[40] = Complex{0.0, 0.5};
    CHECK(measure_flux(st, st.config.site_x(32)) == doctest::Approx(0.36).epsilon(1e-15));
    CHECK(measure_flux(st, st.config.site_x(40)) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK_THROWS_AS(measure_flux(st, 1e9), std::domain_error);
}

TEST_CASE("free run transmits everything") {
    // massless: exact translation, tolerance limited only by Gaussian tails
    LatticeConfig cfg = free_config(4096, 0.02, 0.0);
    PacketSpec spec;
    spec.x0 = 20.0;
    spec.sigma = 1.0;
    spec.p0 = 2.0;
    spec.branch = Branch::plus;
    spec.energy_sign = -1;  // lower component, moves toward -x
    const ScatterResult res = run_scattering(cfg, spec, 30.0);
    CHECK(std::abs(res.T_num - 1.0) < 1e-6);
    CHECK(res.R_num < 1e-6);
    CHECK(res.max_step_norm_drift < 1e-12);

    // massive: limited by the wrong-branch weight of the fixed carrier spinor
    cfg.m = 1.0;
    spec.p0 = 2.8284271247461903;
    spec.energy_sign = -1;
    spec.branch = Branch::plus;
    const ScatterResult massive = run_scattering(cfg, spec, 30.0);
    CHECK(std::abs(massive.T_num - 1.0) < 1e-3);
}

TEST_CASE("supercritical step: T_num near the analytic coefficient") {
    LatticeConfig cfg = free_config(4096, 0.025, 1.0);
    cfg.potential = PotentialProfile::step(5.0, 0.0);
    PacketSpec spec;
    spec.x0 = 17.0;
    spec.sigma = 1.6;
    spec.p0 = 2.8284271247461903;  // kinetic energy -3 in the V = 5 region
    spec.branch = Branch::plus;
    spec.energy_sign = -1;

    ScatterOptions opts;
    opts.history_stride = 200;
    const ScatterResult res = run_scattering(cfg, spec, 40.0, opts);

    CHECK(std::abs(res.T_num - 0.8234285119171595) < 0.05);
    CHECK(std::abs(res.T_num + res.R_num - 1.0) < 0.01);
    CHECK(res.max_step_norm_drift < 1e-12);
    CHECK(!res.history.empty());

    // time-integrated flux through the transmitted plane matches the region norm
    CHECK(std::abs(res.transmitted_flux_integral - res.T_num) < 1e-3);
}

TEST_CASE("t_max too small leaves mass in the interaction region") {
    LatticeConfig cfg = free_config(4096, 0.025, 1.0);
    cfg.potential = PotentialProfile::step(5.0, 0.0);
    PacketSpec spec;
    spec.x0 = 17.0;
    spec.sigma = 1.6;
    spec.p0 = 2.8284271247461903;
    spec.energy_sign = -1;
    CHECK_THROWS_AS(run_scattering(cfg, spec, 15.0), std::runtime_error);
}

TEST_CASE("narrow ramp reproduces the sharp step as l -> dx") {
    LatticeConfig cfg = free_config(4096, 0.025, 1.0);
    PacketSpec spec;
    spec.x0 = 17.0;
    spec.sigma = 1.6;
    spec.p0 = 2.8284271247461903;
    spec.energy_sign = -1;

    cfg.potential = PotentialProfile::step(5.0, 0.0);
    const double T_step = run_scattering(cfg, spec, 40.0).T_num;

    double prev = -1.0;
    for (const int mult : {1, 2, 4, 8}) {
        cfg.potential = PotentialProfile::ramp(5.0, 0.0, mult * cfg.dx);
        const double diff = std::abs(run_scattering(cfg, spec, 40.0).T_num - T_step);
        CHECK(diff > prev);  // deviation grows with the ramp width
        prev = diff;
    }
    CHECK(prev < 0.02);  // even l = 8 dx stays close: l << de Broglie wavelength
}

TEST_CASE("ramp momentum kick, same-continuum carrier") {
    LatticeConfig cfg = free_config(4096, 0.025, 1.0);
    cfg.potential = PotentialProfile::ramp(1.0, 0.0, 2.0 * cfg.dx);
    PacketSpec spec;
    spec.x0 = 21.0;
    spec.sigma = 2.0;
    spec.p0 = 1.7320508075688772;  // kinetic 2, total E_f = 3
    spec.branch = Branch::minus;   // spatial momentum -p0, moving left
    spec.energy_sign = +1;

    const KickResult kick = ramp_momentum_kick_check(cfg, spec, 50.0);
    CHECK(kick.k_before == doctest::Approx(-1.7320508075688772).epsilon(0.01));
    CHECK(std::abs(kick.dp_measured - kick.dp_predicted) <= 0.1 * std::abs(kick.dp_predicted));
    CHECK(kick.transmitted_norm > 0.9);
}

TEST_CASE("ramp momentum kick, flat ramp") {
    LatticeConfig cfg = free_config(4096, 0.025, 1.0);
    cfg.potential = PotentialProfile::ramp(0.0, 0.0, 2.0 * cfg.dx);
    PacketSpec spec;
    spec.x0 = 21.0;
    spec.sigma = 2.0;
    spec.p0 = 1.7320508075688772;
    spec.branch = Branch::minus;
    spec.energy_sign = +1;
    const KickResult kick = ramp_momentum_kick_check(cfg, spec, 50.0);
    CHECK(kick.dp_predicted == 0.0);
    CHECK(std::abs(kick.dp_measured) < 0.02);
}

TEST_CASE("absorbing margins: norm nonincreasing, absorbed mass is booked") {
    LatticeConfig cfg = free_config(2048, 0.025, 1.0);
    cfg.potential = PotentialProfile::step(5.0, 0.0);
    cfg.boundary = Boundary::absorbing(6.0, 5.0);
    PacketSpec spec;
    spec.x0 = 11.0;
    spec.sigma = 1.0;
    spec.p0 = 2.8284271247461903;
    spec.energy_sign = -1;

    LatticeState st = make_packet(spec, cfg);
    double prev = st.norm2();
    for (int s = 0; s < 1600; ++s) {
        advance(st);
        if (s % 100 == 99) {
            const double cur = st.norm2();
            CHECK(cur <= prev + 1e-14);
            prev = cur;
        }
    }

    const ScatterResult res = run_scattering(cfg, spec, 40.0);
    CHECK(res.final_state.norm2() < 1.0);
    CHECK(res.absorbed_norm > 0.0);
    // region norms plus absorbed mass still account for everything
    CHECK(std::abs(res.T_num + res.R_num - 1.0) < 0.02);
    CHECK(std::abs(res.T_num - 0.8234285119171595) < 0.05);
}

TEST_CASE("config and packet validation report field paths") {
    LatticeConfig cfg = free_config(1024, 0.02, 1.0);
    PacketSpec spec;
    spec.x0 = 0.0;
    spec.sigma = 0.05;  // < 5 dx
    spec.p0 = 1.0;
    CHECK_THROWS_WITH_AS(make_packet(spec, cfg),
                         "packet.sigma: must be >= 5*dx (resolved packet)",
                         std::invalid_argument);

    spec.sigma = 0.5;
    spec.p0 = 100.0;  // beyond the carrier band
    CHECK_THROWS_AS(make_packet(spec, cfg), std::invalid_argument);

    cfg.dx = -1.0;
    CHECK_THROWS_WITH_AS(cfg.validate(), "dx: must be finite and > 0", std::invalid_argument);

    LatticeConfig ramp_cfg = free_config(1024, 0.02, 1.0);
    ramp_cfg.potential = PotentialProfile::ramp(5.0, 0.0, 0.001);  // narrower than dx
    CHECK_THROWS_AS(ramp_cfg.validate(), std::invalid_argument);
}

TEST_CASE("snapshot export round trip") {
    const LatticeConfig cfg = free_config(256, 0.1, 1.0);
    PacketSpec spec;
    spec.x0 = 0.0;
    spec.sigma = 0.6;
    spec.p0 = 1.0;
    const LatticeState st = make_packet(spec, cfg);
    CHECK_NOTHROW(write_snapshot_csv(st, "snapshot_test.csv"));
    CHECK_NOTHROW(write_snapshot_binary(st, "snapshot_test.bin"));
    std::remove("snapshot_test.csv");
    std::remove("snapshot_test.bin");
}
