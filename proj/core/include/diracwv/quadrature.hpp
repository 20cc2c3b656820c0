#pragma once

#include <cstdint>
#include <functional>
#include <vector>

// Small quadrature toolbox: an adaptive Gauss-Kronrod 7/15 driver with
// endpoint-avoiding nodes, fixed composite rules, and Gauss-Legendre node
// tables for iterated integrals. All drivers evaluate and sum panels in a
// fixed depth-first order, so results are deterministic.

namespace diracwv {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = true;
};

/// Adaptive bisection on an embedded G7/K15 pair. Panels are split until the
/// local QUADPACK-style error estimate fits the proportional share of
/// `abs_tol`, or the evaluation budget runs out (converged = false then;
/// the partial sum is still returned).
QuadResult adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, std::int64_t max_evaluations = 1'000'000);

/// Gauss-Legendre nodes and weights on [-1, 1]. Computed once per order by
/// Newton iteration on P_n and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

/// Composite fixed-order Gauss-Legendre rule over equal panels.
double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels, int order = 32);

/// composite_gauss_legendre after the substitution x = mid - half*cos(theta),
/// which regularizes sqrt-type behavior at both endpoints.
double composite_gauss_legendre_cos(const std::function<double(double)>& f, double a, double b,
                                    int panels, int order = 32);

/// Composite Simpson rule with n subintervals (n even).
double composite_simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace diracwv
