#include "diracwv/weakvalue.hpp"

#include <cmath>

namespace diracwv {

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::supercritical_transmission: return "supercritical_transmission";
        case Regime::same_continuum_transmission: return "same_continuum_transmission";
        case Regime::forbidden: return "forbidden";
        case Regime::subcritical_no_channel: return "subcritical_no_channel";
    }
    return "unknown";
}

Regime classify_regime(double E_f, double V0, double m) {
    PhysParams{m, V0}.validate();
    if (!std::isfinite(E_f)) {
        throw std::invalid_argument("classify_regime: E_f must be finite");
    }
    if (E_f > m) {
        if (V0 - m > E_f) {
            return Regime::supercritical_transmission;
        }
        if (E_f > V0 + m) {
            return Regime::same_continuum_transmission;
        }
        return Regime::forbidden;  // |E_f - V0| <= m, evanescent in x > 0
    }
    if (std::abs(E_f) <= m || std::abs(E_f - V0) <= m) {
        return Regime::forbidden;  // inside a forbidden band on at least one side
    }
    // E_f <= -m with propagating modes on both sides: the target states on
    // the transmitted side sit in the filled sea, so no channel opens.
    return Regime::subcritical_no_channel;
}

bool is_transmission_regime(Regime regime) {
    return regime == Regime::supercritical_transmission ||
           regime == Regime::same_continuum_transmission;
}

WeakValueResult weak_value(const Spinor& pre, const Spinor& post, PauliAxis axis) {
    const Complex overlap = inner(post, pre);
    if (std::abs(overlap) < kOverlapTol) {
        throw std::domain_error("weak_value: near-orthogonal post-selection, weak value diverges");
    }
    WeakValueResult r;
    r.overlap = overlap;
    r.value = inner(post, pauli_matrix(axis) * pre) / overlap;
    r.real_part = r.value.real();
    r.imag_part = r.value.imag();
    r.strange = std::abs(r.real_part) > 1.0 && std::abs(r.imag_part) < kImagGuard;
    return r;
}

WeakValueResult weak_value(const ChiralityState& pre, const ChiralityState& post, PauliAxis axis) {
    return weak_value(pre.spinor, post.spinor, axis);
}

StepStates step_states(double E_f, double V0, double m, Regime regime) {
    if (!is_transmission_regime(regime)) {
        throw std::domain_error("step_states: not a transmission regime");
    }
    if (classify_regime(E_f, V0, m) != regime) {
        throw std::domain_error("step_states: regime inconsistent with (E_f, V0, m)");
    }
    const double E_i = E_f - V0;
    const double p_i = dispersion_momentum(E_i, m);
    const double p_f = dispersion_momentum(E_f, m);
    StepStates s;
    // The transmitted wave is e^{-i p_f x}|E_f^-> in both regimes. The
    // incident wave is e^{+i p_i x}|E_i^+> out of the sea (supercritical)
    // and e^{-i p_i x}|E_i^-> out of the higher continuum (same-continuum);
    // either way its group velocity points at the step.
    s.incident = regime == Regime::supercritical_transmission
                     ? chirality_state(E_i, p_i, m, Branch::plus)
                     : chirality_state(E_i, p_i, m, Branch::minus);
    s.transmitted = chirality_state(E_f, p_f, m, Branch::minus);
    return s;
}

WeakValueResult step_weak_value(double E_f, double V0, double m, Regime regime) {
    const StepStates states = step_states(E_f, V0, m, regime);
    const double p_i = states.incident.momentum;
    const double p_f = states.transmitted.momentum;

    double w = 0.0;
    if (regime == Regime::supercritical_transmission) {
        w = -V0 / (p_i + p_f);
    } else {
        // Equal to (E_i - E_f)/(p_f - p_i) but free of the 0/0 at V0 = 0.
        w = -(p_i + p_f) / (2.0 * E_f - V0);
    }

    WeakValueResult r;
    r.value = Complex(w, 0.0);
    r.real_part = w;
    r.imag_part = 0.0;
    r.overlap = inner(states.transmitted.spinor, states.incident.spinor);
    r.strange = std::abs(w) > 1.0;
    return r;
}

}  // namespace diracwv
