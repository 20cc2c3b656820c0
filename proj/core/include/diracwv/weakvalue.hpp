#pragma once

#include "diracwv/core.hpp"

// Weak values of Pauli observables under pre/post-selection, the closed-form
// step-potential velocity weak value, and regime classification for the
// sharp step V(x) = V0 * theta(x) with the incident wave arriving from
// x = +infinity.

namespace diracwv {

/// Overlaps smaller than this signal a divergent weak value.
inline constexpr double kOverlapTol = 1e-12;
/// |Re w| > 1 counts as strange only when the imaginary part is below this.
inline constexpr double kImagGuard = 1e-9;

enum class Regime {
    supercritical_transmission,  ///< E_f > m and V0 - m > E_f: sea-to-continuum channel
    same_continuum_transmission, ///< E_f > m and E_f > V0 + m: continuum-to-continuum
    forbidden,                   ///< evanescent band on either side (incl. boundary equalities)
    subcritical_no_channel,      ///< propagating on both sides but no open channel (E_f <= -m)
};

const char* to_string(Regime regime);

struct WeakValueResult {
    Complex value{0.0, 0.0};
    double real_part = 0.0;
    double imag_part = 0.0;
    Complex overlap{0.0, 0.0};  ///< <post|pre>
    bool strange = false;       ///< |real_part| > 1 with |imag_part| < kImagGuard
};

/// Total classification of (E_f, V0, m). Boundary equalities (E_f = m,
/// E_f = V0 +- m) carry zero flux and are classified forbidden.
Regime classify_regime(double E_f, double V0, double m);

bool is_transmission_regime(Regime regime);

/// <post|sigma_axis|pre> / <post|pre>. Throws std::domain_error when the
/// overlap magnitude is below kOverlapTol (divergent weak value).
WeakValueResult weak_value(const Spinor& pre, const Spinor& post, PauliAxis axis);
WeakValueResult weak_value(const ChiralityState& pre, const ChiralityState& post, PauliAxis axis);

/// Closed-form velocity weak value for the step, with pre = incident and
/// post = transmitted chirality:
///   supercritical:  w = (E_i - E_f)/(p_i + p_f)   = -V0/(p_i + p_f)
///   same-continuum: w = (E_i - E_f)/(p_f - p_i)   = -(p_i + p_f)/(2 E_f - V0)
/// The second form is exact in both expressions and stays finite through
/// V0 = 0, where it reduces to the ordinary group velocity -p_f/E_f.
/// Throws std::domain_error unless `regime` matches the classification and
/// is one of the two transmission regimes.
WeakValueResult step_weak_value(double E_f, double V0, double m, Regime regime);

/// Incident and transmitted chirality states for a transmission regime, as
/// used by step_weak_value and the scattering module.
struct StepStates {
    ChiralityState incident;
    ChiralityState transmitted;
};
StepStates step_states(double E_f, double V0, double m, Regime regime);

}  // namespace diracwv
