#pragma once

#include <vector>

#include "diracwv/core.hpp"

// Momentum-space propagators for a single plane-wave mode: the exact
// closed-form exponential of H(p) = sigma_z p + sigma_x m, its coin/shift
// Trotterization, the nested-integral series coefficients of the
// time-ordered expansion, and the short-time weak-value factorization of
// the post-selected matrix element.

namespace diracwv {

struct Propagator2x2 {
    Mat2 entries;
    double t = 0.0;
    double p = 0.0;

    /// max-entry deviation of U^dag U from the identity.
    double unitarity_defect() const;
};

/// U(t) = cos(wt) I - i sin(wt) (sigma_z p + sigma_x m)/w with w = sqrt(p^2+m^2).
Propagator2x2 exact_propagator(double p, double m, double t);

/// [shift(eps) coin(eps)]^steps with eps = t/steps, shift = e^{-i sigma_z p eps}
/// applied after coin = e^{-i sigma_x m eps} within each step. First-order
/// accurate in eps; exactly unitary at every step.
Propagator2x2 trotter_propagator(double p, double m, double t, int steps);

struct SeriesCoefficients {
    int n = 0;
    double f_c = 0.0;
    double f_s = 0.0;
    double t = 0.0;
};

/// Nested-integral coefficients
///   f_{c,s}^(n)(t) = int_0^t dt1 ... int_0^{t_{n-1}} dt_n cos/sin[m(t + 2 sum_k (-1)^k t_k)]
/// with f_c^(0) = cos(mt), f_s^(0) = sin(mt). Orders 1..3 are evaluated by
/// iterated 64-node Gauss-Legendre quadrature (absolute error well below
/// 1e-8 for the smooth integrands involved). Throws for n < 0 or n > 3.
SeriesCoefficients series_coefficient(int n, double t, double m);

/// Truncated time-ordered series for the post-selected matrix element of a
/// plane-wave mode:
///   <post|U(t)|pre> = sum_{n<=order} (-i p)^n F^(n)(t),
///   F^(n) = f_c^(n) <post|sigma_z|pre> - f_s^(n) <post|sigma_y|pre>   (n odd)
///         = f_c^(n) <post|pre>  -  i f_s^(n) <post|sigma_x|pre>       (n even).
/// The nested integrals already carry the time-ordering 1/n!, so no extra
/// factorial appears (checked against the exact propagator; the m = 0 limit
/// reproduces e^{-i sigma_z p t} term by term). Throws for order > 3.
Complex postselected_element(const Spinor& pre, const Spinor& post, double p, double m,
                             double t, int order);
Complex postselected_element(const ChiralityState& pre, const ChiralityState& post, double p,
                             double m, double t, int order);

/// Short-time weak-value factorization:
///   <post|U(t)|pre> ~ <post|pre> e^{-i m <sigma_x>_w t} e^{-i p <sigma_z>_w t},
/// two scalar exponentials, deviating from the exact element at O(t^2).
/// Throws std::domain_error for near-orthogonal pre/post.
Complex shorttime_weakvalue_propagator(const Spinor& pre, const Spinor& post, double p,
                                       double m, double t);
Complex shorttime_weakvalue_propagator(const ChiralityState& pre, const ChiralityState& post,
                                       double p, double m, double t);

/// Least-squares slope of log(err) vs log(x); shared by the convergence
/// studies (Trotter order, short-time propagator order, series residuals).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& err);

}  // namespace diracwv
