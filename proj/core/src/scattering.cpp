#include "diracwv/scattering.hpp"

#include <cmath>

namespace diracwv {

namespace {

ScatteringSolution degenerate_solution(double E_f, double V0) {
    ScatteringSolution s;
    s.E_f = E_f;
    s.E_i = E_f - V0;
    s.degenerate = true;
    s.T = 0.0;
    s.R = 1.0;
    return s;
}

double flux_of(const Spinor& v) { return std::norm(v.upper) - std::norm(v.lower); }

}  // namespace

double ratio_r(double E_f, double V0, double m, Regime regime) {
    if (!is_transmission_regime(regime) || classify_regime(E_f, V0, m) != regime) {
        throw std::domain_error("ratio_r: not a valid transmission regime for (E_f, V0, m)");
    }
    const double E_i = E_f - V0;
    const double p_i = dispersion_momentum(E_i, m);
    const double p_f = dispersion_momentum(E_f, m);
    if (E_i + m == 0.0) {
        throw std::domain_error("ratio_r: band-edge singularity E_i = -m");
    }
    // Signed incident plane-wave momentum: +p_i out of the sea, -p_i out of
    // the higher continuum. Both signs land on r > 0.
    const double k_i = regime == Regime::supercritical_transmission ? p_i : -p_i;
    return -(k_i / p_f) * (E_f + m) / (E_i + m);
}

ScatteringSolution boundary_match(double E_f, double V0, double m, Regime regime) {
    if (!is_transmission_regime(regime) || classify_regime(E_f, V0, m) != regime) {
        return degenerate_solution(E_f, V0);
    }
    const double E_i = E_f - V0;
    const double p_i = dispersion_momentum(E_i, m);
    const double p_f = dispersion_momentum(E_f, m);

    // Unnormalized spinors [m, E -+ p]; the normalization constants cancel
    // in every flux ratio. The reflected wave flips the sign of the
    // incident plane-wave momentum.
    const bool supercritical = regime == Regime::supercritical_transmission;
    const Spinor chi_inc{Complex(m, 0.0), Complex(supercritical ? E_i - p_i : E_i + p_i, 0.0)};
    const Spinor chi_ref{Complex(m, 0.0), Complex(supercritical ? E_i + p_i : E_i - p_i, 0.0)};
    const Spinor chi_tra{Complex(m, 0.0), Complex(E_f + p_f, 0.0)};

    // A chi_inc + B chi_ref = D chi_tra with A = 1: solve for (B, D).
    const Complex m00 = chi_ref.upper, m01 = -chi_tra.upper;
    const Complex m10 = chi_ref.lower, m11 = -chi_tra.lower;
    const Complex det = m00 * m11 - m01 * m10;
    if (std::abs(det) < 1e-14 * (std::abs(m00 * m11) + std::abs(m01 * m10))) {
        throw std::logic_error("boundary_match: singular matching system");
    }
    const Complex rhs0 = -chi_inc.upper, rhs1 = -chi_inc.lower;
    const Complex B = (rhs0 * m11 - m01 * rhs1) / det;
    const Complex D = (m00 * rhs1 - rhs0 * m10) / det;

    ScatteringSolution s;
    s.E_f = E_f;
    s.E_i = E_i;
    s.p_i = p_i;
    s.p_f = p_f;
    s.amp_ratio_B_over_A = B;
    s.amp_ratio_D_over_A = D;
    s.j_inc = std::abs(flux_of(chi_inc));
    s.j_ref = std::abs(flux_of(chi_ref)) * std::norm(B);
    s.j_tra = std::abs(flux_of(chi_tra)) * std::norm(D);
    s.T = s.j_tra / s.j_inc;
    s.R = s.j_ref / s.j_inc;
    s.r = ratio_r(E_f, V0, m, regime);
    return s;
}

ScatteringSolution transmission(double E_f, double V0, double m, Regime regime) {
    if (!is_transmission_regime(regime) || classify_regime(E_f, V0, m) != regime) {
        return degenerate_solution(E_f, V0);
    }
    ScatteringSolution s = boundary_match(E_f, V0, m, regime);
    const double r = s.r;
    const double onep = 1.0 + r;
    s.T = 4.0 * r / (onep * onep);
    s.R = (1.0 - r) * (1.0 - r) / (onep * onep);
    return s;
}

double weakvalue_transmission(double E_f, double V0, double m, Regime regime) {
    const StepStates states = step_states(E_f, V0, m, regime);
    const double v_i = states.incident.group_velocity();
    const double v_f = states.transmitted.group_velocity();
    const double w = step_weak_value(E_f, V0, m, regime).real_part;
    if (v_i == 0.0 || v_f == 0.0 || w == 0.0) {
        throw std::logic_error("weakvalue_transmission: zero velocity or weak value");
    }
    const double harmonic_mean = 2.0 / (1.0 / v_i + 1.0 / v_f);
    return harmonic_mean / w;
}

ScatteringSolution transmission(double E_f, double V0, double m) {
    return transmission(E_f, V0, m, classify_regime(E_f, V0, m));
}

ScatteringSolution boundary_match(double E_f, double V0, double m) {
    return boundary_match(E_f, V0, m, classify_regime(E_f, V0, m));
}

}  // namespace diracwv
