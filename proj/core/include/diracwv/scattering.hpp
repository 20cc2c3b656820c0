#pragma once

#include "diracwv/core.hpp"
#include "diracwv/weakvalue.hpp"

// Analytic scattering off the sharp step: boundary matching at x = 0,
// probability-current bookkeeping, the transmission/reflection coefficients
// T = 4r/(1+r)^2, R = (1-r)^2/(1+r)^2, and the weak-value route to the same
// T through the harmonic-mean velocity identity.

namespace diracwv {

struct ScatteringSolution {
    double E_f = 0.0;
    double E_i = 0.0;  ///< E_f - V0
    double p_i = 0.0;  ///< positive root for the incident side
    double p_f = 0.0;  ///< positive root for the transmitted side
    double r = 0.0;
    double T = 0.0;
    double R = 1.0;
    Complex amp_ratio_B_over_A{0.0, 0.0};
    Complex amp_ratio_D_over_A{0.0, 0.0};
    // Flux magnitudes per unit incident amplitude, computed with the
    // unnormalized spinors [m, E -+ p]; directions are fixed by the regime
    // geometry (incident and transmitted move toward -x, reflected toward +x).
    double j_inc = 0.0;
    double j_ref = 0.0;
    double j_tra = 0.0;
    /// Set for non-transmission regimes: T = 0, R = 1 and the fields above
    /// are filled with zeros where no propagating wave exists.
    bool degenerate = false;
};

/// The matching ratio r of Eq.-style 4r/(1+r)^2 form; r > 0 in both
/// transmission regimes. Throws std::domain_error outside them.
double ratio_r(double E_f, double V0, double m, Regime regime);

/// Transmission/reflection via the closed-form ratio r, with amplitude
/// ratios and fluxes populated from boundary_match. Non-transmission
/// regimes return the degenerate (T = 0, R = 1) solution instead of
/// throwing, so energy integrals can sweep across band edges.
ScatteringSolution transmission(double E_f, double V0, double m, Regime regime);

/// Independent route: solve the 2x2 matching system at x = 0 for B/A and
/// D/A and build T, R from the probability currents j = Psi^dag sigma_z Psi.
/// Shares no algebra with the 4r/(1+r)^2 form beyond the spinors themselves.
ScatteringSolution boundary_match(double E_f, double V0, double m, Regime regime);

/// T from the weak-value identity: T * w equals the harmonic mean of the
/// incident and transmitted group velocities, so
///   T = (2 / (1/v_i + 1/v_f)) / w.
double weakvalue_transmission(double E_f, double V0, double m, Regime regime);

// Conveniences that classify internally.
ScatteringSolution transmission(double E_f, double V0, double m);
ScatteringSolution boundary_match(double E_f, double V0, double m);

}  // namespace diracwv
