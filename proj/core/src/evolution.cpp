#include "diracwv/evolution.hpp"

#include <cmath>

#include "diracwv/quadrature.hpp"
#include "diracwv/weakvalue.hpp"

namespace diracwv {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kNestedOrder = 64;  // Gauss-Legendre nodes per nesting level

// Plain sequential product: rounding accumulates as a random walk, an order
// of magnitude tighter than binary squaring at 1e4 steps.
Mat2 matrix_power(const Mat2& base, int exponent) {
    Mat2 acc = Mat2::identity();
    for (int i = 0; i < exponent; ++i) {
        acc = base * acc;
    }
    return acc;
}

}  // namespace

double Propagator2x2::unitarity_defect() const {
    return max_entry_distance(entries.adjoint() * entries, Mat2::identity());
}

Propagator2x2 exact_propagator(double p, double m, double t) {
    const double w = std::hypot(p, m);
    const double c = std::cos(w * t);
    // sin(wt)/w, continuous through w = 0
    const double s = w == 0.0 ? t : std::sin(w * t) / w;
    Propagator2x2 u;
    u.t = t;
    u.p = p;
    u.entries = {Complex(c, -s * p), Complex(0.0, -s * m),
                 Complex(0.0, -s * m), Complex(c, s * p)};
    return u;
}

Propagator2x2 trotter_propagator(double p, double m, double t, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("trotter_propagator: steps must be >= 1");
    }
    const double eps = t / steps;
    const double cm = std::cos(m * eps);
    const double sm = std::sin(m * eps);
    const Mat2 coin{Complex(cm, 0.0), Complex(0.0, -sm), Complex(0.0, -sm), Complex(cm, 0.0)};
    const Mat2 shift{std::polar(1.0, -p * eps), 0.0, 0.0, std::polar(1.0, p * eps)};
    Propagator2x2 u;
    u.t = t;
    u.p = p;
    u.entries = matrix_power(shift * coin, steps);
    return u;
}

SeriesCoefficients series_coefficient(int n, double t, double m) {
    if (n < 0 || n > 3) {
        throw std::invalid_argument("series_coefficient: supported orders are 0..3");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("series_coefficient: t must be >= 0");
    }
    SeriesCoefficients out;
    out.n = n;
    out.t = t;
    if (n == 0) {
        out.f_c = std::cos(m * t);
        out.f_s = std::sin(m * t);
        return out;
    }

    const GaussLegendre& gl = gauss_legendre(kNestedOrder);
    auto node = [&](int i, double hi) { return 0.5 * hi * (gl.nodes[i] + 1.0); };

    double acc_c = 0.0;
    double acc_s = 0.0;
    if (n == 1) {
        for (int i = 0; i < kNestedOrder; ++i) {
            const double t1 = node(i, t);
            const double arg = m * (t - 2.0 * t1);
            acc_c += gl.weights[i] * std::cos(arg);
            acc_s += gl.weights[i] * std::sin(arg);
        }
        acc_c *= 0.5 * t;
        acc_s *= 0.5 * t;
    } else if (n == 2) {
        for (int i = 0; i < kNestedOrder; ++i) {
            const double t1 = node(i, t);
            double in_c = 0.0, in_s = 0.0;
            for (int j = 0; j < kNestedOrder; ++j) {
                const double t2 = node(j, t1);
                const double arg = m * (t - 2.0 * t1 + 2.0 * t2);
                in_c += gl.weights[j] * std::cos(arg);
                in_s += gl.weights[j] * std::sin(arg);
            }
            acc_c += gl.weights[i] * 0.5 * t1 * in_c;
            acc_s += gl.weights[i] * 0.5 * t1 * in_s;
        }
        acc_c *= 0.5 * t;
        acc_s *= 0.5 * t;
    } else {
        for (int i = 0; i < kNestedOrder; ++i) {
            const double t1 = node(i, t);
            double mid_c = 0.0, mid_s = 0.0;
            for (int j = 0; j < kNestedOrder; ++j) {
                const double t2 = node(j, t1);
                double in_c = 0.0, in_s = 0.0;
                for (int k = 0; k < kNestedOrder; ++k) {
                    const double t3 = node(k, t2);
                    const double arg = m * (t - 2.0 * t1 + 2.0 * t2 - 2.0 * t3);
                    in_c += gl.weights[k] * std::cos(arg);
                    in_s += gl.weights[k] * std::sin(arg);
                }
                mid_c += gl.weights[j] * 0.5 * t2 * in_c;
                mid_s += gl.weights[j] * 0.5 * t2 * in_s;
            }
            acc_c += gl.weights[i] * 0.5 * t1 * mid_c;
            acc_s += gl.weights[i] * 0.5 * t1 * mid_s;
        }
        acc_c *= 0.5 * t;
        acc_s *= 0.5 * t;
    }
    out.f_c = acc_c;
    out.f_s = acc_s;
    return out;
}

Complex postselected_element(const Spinor& pre, const Spinor& post, double p, double m,
                             double t, int order) {
    if (order < 0 || order > 3) {
        throw std::invalid_argument("postselected_element: supported orders are 0..3");
    }
    const Complex ovl = inner(post, pre);
    const Complex sx = inner(post, pauli_matrix(PauliAxis::x) * pre);
    const Complex sy = inner(post, pauli_matrix(PauliAxis::y) * pre);
    const Complex sz = inner(post, pauli_matrix(PauliAxis::z) * pre);

    Complex sum{0.0, 0.0};
    Complex momentum_power{1.0, 0.0};  // (-i p)^n
    for (int n = 0; n <= order; ++n) {
        const SeriesCoefficients f = series_coefficient(n, t, m);
        const Complex F = (n % 2 == 1) ? f.f_c * sz - f.f_s * sy
                                       : f.f_c * ovl - kI * f.f_s * sx;
        sum += momentum_power * F;
        momentum_power *= -kI * p;
    }
    return sum;
}

Complex postselected_element(const ChiralityState& pre, const ChiralityState& post, double p,
                             double m, double t, int order) {
    return postselected_element(pre.spinor, post.spinor, p, m, t, order);
}

Complex shorttime_weakvalue_propagator(const Spinor& pre, const Spinor& post, double p,
                                       double m, double t) {
    const Complex ovl = inner(post, pre);
    const Complex wx = weak_value(pre, post, PauliAxis::x).value;
    const Complex wz = weak_value(pre, post, PauliAxis::z).value;
    return ovl * std::exp(-kI * m * wx * t) * std::exp(-kI * p * wz * t);
}

Complex shorttime_weakvalue_propagator(const ChiralityState& pre, const ChiralityState& post,
                                       double p, double m, double t) {
    return shorttime_weakvalue_propagator(pre.spinor, post.spinor, p, m, t);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& err) {
    if (x.size() != err.size() || x.size() < 2) {
        throw std::invalid_argument("loglog_slope: need >= 2 paired samples");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(err[i] > 0.0)) {
            continue;  // zero-error points carry no slope information
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(err[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) {
        throw std::invalid_argument("loglog_slope: fewer than 2 usable samples");
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace diracwv
