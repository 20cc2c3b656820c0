#include "diracwv/lattice.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "diracwv/weakvalue.hpp"

namespace diracwv::lattice {

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(field + ": " + what);
    }
}

}  // namespace

PotentialProfile PotentialProfile::none() { return {}; }

PotentialProfile PotentialProfile::step(double V0, double x0) {
    PotentialProfile p;
    p.kind = Kind::step;
    p.V0 = V0;
    p.x0 = x0;
    return p;
}

PotentialProfile PotentialProfile::ramp(double V0, double x_left, double width) {
    PotentialProfile p;
    p.kind = Kind::ramp;
    p.V0 = V0;
    p.x_left = x_left;
    p.width = width;
    return p;
}

double PotentialProfile::value(double x) const {
    switch (kind) {
        case Kind::none: return 0.0;
        case Kind::step: return x > x0 ? V0 : 0.0;
        case Kind::ramp:
            if (x <= x_left) return 0.0;
            if (x >= x_left + width) return V0;
            return V0 * (x - x_left) / width;
    }
    return 0.0;
}

double PotentialProfile::support_lo() const {
    switch (kind) {
        case Kind::none: return 0.0;
        case Kind::step: return x0;
        case Kind::ramp: return x_left;
    }
    return 0.0;
}

double PotentialProfile::support_hi() const {
    switch (kind) {
        case Kind::none: return 0.0;
        case Kind::step: return x0;
        case Kind::ramp: return x_left + width;
    }
    return 0.0;
}

Boundary Boundary::periodic() { return {}; }

Boundary Boundary::absorbing(double width, double strength) {
    Boundary b;
    b.kind = Kind::absorbing_margin;
    b.width = width;
    b.strength = strength;
    return b;
}

int LatticeConfig::nearest_site(double x) const {
    const int j = static_cast<int>(std::lround((x - x_min()) / dx));
    return std::clamp(j, 0, n_sites - 1);
}

void LatticeConfig::validate() const {
    require(n_sites >= 16, "n_sites", "must be >= 16");
    require(std::isfinite(dx) && dx > 0.0, "dx", "must be finite and > 0");
    require(std::isfinite(m) && m >= 0.0, "m", "must be finite and >= 0");
    require(std::isfinite(potential.V0), "potential.V0", "must be finite");
    if (potential.kind == PotentialProfile::Kind::ramp) {
        require(potential.width >= dx, "potential.width", "ramp width must be >= dx");
        require(std::isfinite(potential.x_left), "potential.x_left", "must be finite");
    }
    if (potential.kind == PotentialProfile::Kind::step) {
        require(std::isfinite(potential.x0), "potential.x0", "must be finite");
    }
    if (boundary.kind == Boundary::Kind::absorbing_margin) {
        require(boundary.width > 0.0 && boundary.width < 0.5 * length(), "boundary.width",
                "must be positive and smaller than half the grid");
        require(boundary.strength > 0.0, "boundary.strength", "must be > 0");
    }
}

double PacketSpec::kinetic_energy(double m) const {
    return energy_sign * std::hypot(p0, m);
}

void PacketSpec::validate(const LatticeConfig& config) const {
    require(std::isfinite(x0) && std::isfinite(p0) && std::isfinite(sigma), "packet",
            "fields must be finite");
    require(energy_sign == 1 || energy_sign == -1, "packet.energy_sign", "must be +1 or -1");
    require(sigma >= 5.0 * config.dx, "packet.sigma", "must be >= 5*dx (resolved packet)");
    require(config.length() >= 20.0 * sigma, "packet.sigma",
            "grid must span at least 20 packet widths");
    const double k0 = spatial_momentum();
    require(std::abs(k0) <= std::numbers::pi / (2.0 * config.dx), "packet.p0",
            "carrier momentum must stay below pi/(2 dx)");
    require(x0 - 5.0 * sigma >= config.x_min() && x0 + 5.0 * sigma <= config.x_max(),
            "packet.x0", "packet does not fit the grid");
    if (config.m == 0.0) {
        require(p0 != 0.0, "packet.p0", "massless carrier needs nonzero momentum");
    }
}

double LatticeState::norm2() const {
    double s = 0.0;
    for (std::size_t j = 0; j < upper.size(); ++j) {
        s += std::norm(upper[j]) + std::norm(lower[j]);
    }
    return s * config.dx;
}

double LatticeState::norm() const { return std::sqrt(norm2()); }

double LatticeState::norm2_between(double x_lo, double x_hi) const {
    double s = 0.0;
    for (int j = 0; j < config.n_sites; ++j) {
        const double x = config.site_x(j);
        if (x >= x_lo && x < x_hi) {
            s += std::norm(upper[j]) + std::norm(lower[j]);
        }
    }
    return s * config.dx;
}

double LatticeState::centroid() const {
    double w = 0.0, xw = 0.0;
    for (int j = 0; j < config.n_sites; ++j) {
        const double d = std::norm(upper[j]) + std::norm(lower[j]);
        w += d;
        xw += config.site_x(j) * d;
    }
    if (w == 0.0) {
        throw std::domain_error("centroid: empty field");
    }
    return xw / w;
}

LatticeState make_packet(const PacketSpec& spec, const LatticeConfig& config) {
    config.validate();
    spec.validate(config);

    const double k0 = spec.spatial_momentum();
    Spinor chi;
    if (config.m > 0.0) {
        const double E = spec.kinetic_energy(config.m);
        chi = chirality_state(E, spec.p0, config.m, spec.branch).spinor;
    } else {
        // Massless carriers are sigma_z eigenstates: [1,0] rides e^{ikx}
        // with E = +k, [0,1] with E = -k.
        const bool upper_mover = (spec.energy_sign > 0) == (k0 > 0.0);
        chi = upper_mover ? Spinor{1.0, 0.0} : Spinor{0.0, 1.0};
    }

    LatticeState st;
    st.config = config;
    st.upper.assign(config.n_sites, Complex{});
    st.lower.assign(config.n_sites, Complex{});
    for (int j = 0; j < config.n_sites; ++j) {
        const double x = config.site_x(j);
        const double d = x - spec.x0;
        const double env = std::exp(-d * d / (4.0 * spec.sigma * spec.sigma));
        const Complex amp = env * std::polar(1.0, k0 * x);
        st.upper[j] = amp * chi.upper;
        st.lower[j] = amp * chi.lower;
    }
    const double n = st.norm();
    for (int j = 0; j < config.n_sites; ++j) {
        st.upper[j] /= n;
        st.lower[j] /= n;
    }
    return st;
}

namespace {

void build_absorb_mask(const LatticeConfig& cfg, std::vector<double>& mask) {
    mask.assign(cfg.n_sites, 1.0);
    if (cfg.boundary.kind != Boundary::Kind::absorbing_margin) {
        return;
    }
    const double w = cfg.boundary.width;
    for (int j = 0; j < cfg.n_sites; ++j) {
        const double x = cfg.site_x(j);
        const double d_edge = std::min(x - cfg.x_min(), cfg.x_max() - x);
        if (d_edge < w) {
            const double u = 1.0 - d_edge / w;  // 0 at the inner rim, 1 at the edge
            const double s = std::sin(0.5 * std::numbers::pi * u);
            mask[j] = std::exp(-cfg.boundary.strength * cfg.eps() * s * s);
        }
    }
}

}  // namespace

void advance(LatticeState& state, StepProbe* probe) {
    const LatticeConfig& cfg = state.config;
    const int n = cfg.n_sites;
    const double eps = cfg.eps();
    const double cm = std::cos(cfg.m * eps);
    const Complex od{0.0, -std::sin(cfg.m * eps)};  // coin off-diagonal
    const bool has_potential = cfg.potential.kind != PotentialProfile::Kind::none;

    for (int j = 0; j < n; ++j) {
        Complex u = state.upper[j];
        Complex l = state.lower[j];
        if (has_potential) {
            const double V = cfg.potential.value(cfg.site_x(j));
            if (V != 0.0) {
                const Complex ph = std::polar(1.0, -V * eps);
                u *= ph;
                l *= ph;
            }
        }
        state.upper[j] = cm * u + od * l;
        state.lower[j] = od * u + cm * l;
    }

    // The conditional shift is a permutation, so the probability moving
    // through the bond (flux_bond, flux_bond+1) this step is exactly the
    // post-coin upper mass at flux_bond minus the lower mass at flux_bond+1.
    if (probe != nullptr && probe->flux_bond >= 0) {
        const int k = probe->flux_bond;
        probe->crossed +=
            (std::norm(state.upper[k]) - std::norm(state.lower[(k + 1) % n])) * cfg.dx;
    }

    std::rotate(state.upper.rbegin(), state.upper.rbegin() + 1, state.upper.rend());
    std::rotate(state.lower.begin(), state.lower.begin() + 1, state.lower.end());

    if (cfg.boundary.kind == Boundary::Kind::absorbing_margin) {
        if (state.absorb_mask_cache.size() != static_cast<std::size_t>(n)) {
            build_absorb_mask(cfg, state.absorb_mask_cache);
        }
        for (int j = 0; j < n; ++j) {
            const double mk = state.absorb_mask_cache[j];
            if (mk == 1.0) {
                continue;
            }
            const double before = std::norm(state.upper[j]) + std::norm(state.lower[j]);
            state.upper[j] *= mk;
            state.lower[j] *= mk;
            if (probe != nullptr) {
                const double lost = before * (1.0 - mk * mk) * cfg.dx;
                (cfg.site_x(j) < probe->split_x ? probe->absorbed_left
                                                : probe->absorbed_right) += lost;
            }
        }
    }
    state.time += eps;
}

LatticeState step(LatticeState state) {
    advance(state);
    return state;
}

double measure_flux(const LatticeState& state, double x_plane) {
    const LatticeConfig& cfg = state.config;
    if (x_plane < cfg.x_min() || x_plane > cfg.x_max()) {
        throw std::domain_error("measure_flux: plane outside the grid");
    }
    const int j = cfg.nearest_site(x_plane);
    return std::norm(state.upper[j]) - std::norm(state.lower[j]);
}

double momentum_centroid(const LatticeState& state, double x_lo, double x_hi) {
    const int n = state.config.n_sites;
    const double dx = state.config.dx;
    std::vector<Complex> in(n), out(n);
    std::vector<double> power(n, 0.0);
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      FFTW_FORWARD, FFTW_ESTIMATE);
    for (int comp = 0; comp < 2; ++comp) {
        const auto& field = comp == 0 ? state.upper : state.lower;
        for (int j = 0; j < n; ++j) {
            const double x = state.config.site_x(j);
            in[j] = (x >= x_lo && x < x_hi) ? field[j] : Complex{};
        }
        fftw_execute(plan);
        for (int q = 0; q < n; ++q) {
            power[q] += std::norm(out[q]);
        }
    }
    fftw_destroy_plan(plan);

    double total = 0.0, weighted = 0.0;
    for (int q = 0; q < n; ++q) {
        const int qs = q <= n / 2 ? q : q - n;
        const double k = 2.0 * std::numbers::pi * qs / (n * dx);
        total += power[q];
        weighted += k * power[q];
    }
    if (total == 0.0) {
        throw std::domain_error("momentum_centroid: empty window");
    }
    return weighted / total;
}

ScatterResult run_scattering(const LatticeConfig& config, const PacketSpec& spec, double t_max,
                             const ScatterOptions& opts) {
    LatticeState st = make_packet(spec, config);

    const double sigma = spec.sigma;
    const double s_lo = config.potential.support_lo();
    const double s_hi = config.potential.support_hi();
    const bool has_potential = config.potential.kind != PotentialProfile::Kind::none;
    if (has_potential) {
        require(spec.x0 >= s_hi + 10.0 * sigma, "packet.x0",
                "must start >= 10 sigma inside the incident region");
    }
    require(config.x_max() - spec.x0 >= 10.0 * sigma, "packet.x0",
            "must start >= 10 sigma from the grid boundary");

    const double pad = opts.interaction_pad > 0.0 ? opts.interaction_pad : 5.0 * sigma;
    const double region_lo = has_potential ? s_lo - pad : 0.0;

    StepProbe probe;
    probe.flux_bond = config.nearest_site(region_lo);
    probe.split_x = 0.5 * (s_lo + s_hi);
    const double plane_x = config.site_x(probe.flux_bond) + 0.5 * config.dx;
    // without a potential the plane partitions the grid exactly
    const double region_hi = has_potential ? s_hi + pad : plane_x;

    const int steps = static_cast<int>(std::lround(t_max / config.eps()));
    const bool periodic = config.boundary.kind == Boundary::Kind::periodic;

    ScatterResult res;
    res.transmitted_plane_x = plane_x;
    double prev_norm = st.norm2();
    for (int s = 1; s <= steps; ++s) {
        advance(st, &probe);
        if (periodic) {
            const double cur = st.norm2();
            res.max_step_norm_drift = std::max(res.max_step_norm_drift, std::abs(cur - prev_norm));
            prev_norm = cur;
        }
        if (opts.history_stride > 0 && s % opts.history_stride == 0) {
            HistorySample h;
            h.t = st.time;
            h.centroid = st.centroid();
            h.norm2 = st.norm2();
            h.flux_at_plane = measure_flux(st, plane_x);
            res.history.push_back(h);
        }
        if (opts.snapshot_stride > 0 && s % opts.snapshot_stride == 0) {
            char frame[32];
            std::snprintf(frame, sizeof frame, "_%06d", s);
            const std::string path =
                opts.snapshot_prefix + frame + (opts.snapshot_binary ? ".bin" : ".csv");
            opts.snapshot_binary ? write_snapshot_binary(st, path) : write_snapshot_csv(st, path);
        }
    }

    const double inf = std::numeric_limits<double>::infinity();
    res.steps = steps;
    res.T_num = st.norm2_between(-inf, plane_x) + probe.absorbed_left;
    res.R_num = st.norm2_between(region_hi, inf) + probe.absorbed_right;
    res.interaction_norm = has_potential ? st.norm2_between(region_lo, region_hi) : 0.0;
    res.absorbed_norm = probe.absorbed_left + probe.absorbed_right;
    res.transmitted_flux_integral = -probe.crossed;  // leftward counted positive
    res.final_state = std::move(st);
    if (res.interaction_norm > 1e-3) {
        throw std::runtime_error(
            "run_scattering: t_max too small, packet still in the interaction region");
    }
    return res;
}

KickResult ramp_momentum_kick_check(const LatticeConfig& config, const PacketSpec& spec,
                                    double t_max) {
    if (config.potential.kind != PotentialProfile::Kind::ramp) {
        throw std::invalid_argument("ramp_momentum_kick_check: needs a ramp potential");
    }
    if (config.m == 0.0) {
        throw std::invalid_argument("ramp_momentum_kick_check: massless carrier not supported");
    }
    const double m = config.m;
    const double E_f = spec.kinetic_energy(m) + config.potential.V0;
    const Regime regime = classify_regime(E_f, config.potential.V0, m);
    if (!is_transmission_regime(regime) && config.potential.V0 != 0.0) {
        throw std::domain_error("ramp_momentum_kick_check: carrier energy does not transmit");
    }

    const LatticeState initial = make_packet(spec, config);
    const double inf = std::numeric_limits<double>::infinity();
    KickResult kick;
    kick.k_before = momentum_centroid(initial, -inf, inf);

    const ScatterResult run = run_scattering(config, spec, t_max);
    kick.transmitted_norm = run.T_num;
    if (run.T_num < 1e-3) {
        throw std::runtime_error("ramp_momentum_kick_check: packet failed to traverse the ramp");
    }
    kick.k_after = momentum_centroid(run.final_state, -inf, run.transmitted_plane_x);
    kick.dp_measured = kick.k_after - kick.k_before;

    // Transmitted carrier runs on e^{-i p_f x}; with V0 = 0 the ramp is flat
    // and the momentum is unchanged.
    const double k_out = config.potential.V0 == 0.0 ? spec.spatial_momentum()
                                                    : -dispersion_momentum(E_f, m);
    kick.dp_predicted = k_out - spec.spatial_momentum();
    return kick;
}

void write_snapshot_csv(const LatticeState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_snapshot_csv: cannot open " + path);
    }
    out << "site,x,re_upper,im_upper,re_lower,im_lower\n";
    char buf[160];
    for (int j = 0; j < state.config.n_sites; ++j) {
        std::snprintf(buf, sizeof buf, "%d,%.12e,%.12e,%.12e,%.12e,%.12e\n", j,
                      state.config.site_x(j), state.upper[j].real(), state.upper[j].imag(),
                      state.lower[j].real(), state.lower[j].imag());
        out << buf;
    }
}

void write_snapshot_binary(const LatticeState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_snapshot_binary: cannot open " + path);
    }
    const char magic[4] = {'D', 'W', 'V', 'L'};
    const std::int32_t n = state.config.n_sites;
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&state.config.dx), sizeof(double));
    out.write(reinterpret_cast<const char*>(&state.time), sizeof(double));
    for (int j = 0; j < n; ++j) {
        const double row[4] = {state.upper[j].real(), state.upper[j].imag(),
                               state.lower[j].real(), state.lower[j].imag()};
        out.write(reinterpret_cast<const char*>(row), sizeof row);
    }
}

}  // namespace diracwv::lattice
