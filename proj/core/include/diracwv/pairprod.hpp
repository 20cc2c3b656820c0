#pragma once

#include <cstdint>

// Spontaneous pair-production rate: the energy integral of the transmission
// coefficient over the supercritical window [m, V0 - m], divided by 2*pi.
// The zero-temperature occupation factor is exactly the window indicator,
// so the integrand is T(E)/(2*pi) inside and 0 outside.

namespace diracwv {

struct RateResult {
    double rate = 0.0;             ///< pairs per unit time, natural units
    double estimated_error = 0.0;
    std::int64_t evaluations = 0;
    double window_lo = 0.0;        ///< m
    double window_hi = 0.0;        ///< V0 - m
    bool converged = true;

    bool window_empty() const { return !(window_hi > window_lo); }
};

/// T(E)/(2*pi) on the open window m < E < V0 - m; 0 outside. Continuous on
/// the window and vanishing like sqrt at both edges.
double rate_integrand(double E, double V0, double m);

/// Adaptive GK15 integration of rate_integrand with absolute tolerance
/// `tol` and a default budget of 1e6 integrand calls. V0 <= 2m yields the
/// empty-window result (rate = 0). Throws std::invalid_argument for
/// tol <= 0 or invalid parameters; budget exhaustion is reported through
/// `converged`, not an exception.
RateResult pair_rate(double V0, double m, double tol,
                     std::int64_t max_evaluations = 1'000'000);

/// Cross-check scheme: fixed composite Gauss-Legendre on the cos-substituted
/// variable (regularizes the sqrt edges). Independent of the adaptive driver.
double pair_rate_composite(double V0, double m, int panels = 16, int order = 32);

}  // namespace diracwv
