#include "diracwv/pairprod.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diracwv/core.hpp"
#include "diracwv/quadrature.hpp"
#include "diracwv/scattering.hpp"

namespace diracwv {

double rate_integrand(double E, double V0, double m) {
    PhysParams{m, V0}.validate();
    if (!(E > m) || !(E < V0 - m)) {
        return 0.0;
    }
    // Interior points of the window are always supercritical.
    const ScatteringSolution s =
        transmission(E, V0, m, Regime::supercritical_transmission);
    return s.T / (2.0 * std::numbers::pi);
}

RateResult pair_rate(double V0, double m, double tol, std::int64_t max_evaluations) {
    PhysParams{m, V0}.validate();
    if (!(tol > 0.0)) {
        throw std::invalid_argument("pair_rate: tol must be > 0");
    }
    RateResult out;
    out.window_lo = m;
    out.window_hi = V0 - m;
    if (!(V0 > 2.0 * m)) {
        out.window_hi = out.window_lo;  // empty window
        return out;
    }
    const QuadResult q = adaptive_gk15(
        [V0, m](double E) { return rate_integrand(E, V0, m); },
        out.window_lo, out.window_hi, tol, max_evaluations);
    out.rate = q.value;
    out.estimated_error = q.error_estimate;
    out.evaluations = q.evaluations;
    out.converged = q.converged;
    return out;
}

double pair_rate_composite(double V0, double m, int panels, int order) {
    PhysParams{m, V0}.validate();
    if (!(V0 > 2.0 * m)) {
        return 0.0;
    }
    return composite_gauss_legendre_cos(
        [V0, m](double E) { return rate_integrand(E, V0, m); },
        m, V0 - m, panels, order);
}

}  // namespace diracwv
