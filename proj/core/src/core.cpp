#include "diracwv/core.hpp"

#include <cmath>
#include <string>

namespace diracwv {

void PhysParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("PhysParams: m must be finite and > 0");
    }
    if (!std::isfinite(V0)) {
        throw std::invalid_argument("PhysParams: V0 must be finite");
    }
}

double Spinor::norm() const { return std::sqrt(norm2()); }

Spinor Spinor::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::invalid_argument("Spinor: cannot normalize the zero spinor");
    }
    return {upper / n, lower / n};
}

Complex inner(const Spinor& bra, const Spinor& ket) {
    return std::conj(bra.upper) * ket.upper + std::conj(bra.lower) * ket.lower;
}

Spinor operator+(const Spinor& a, const Spinor& b) { return {a.upper + b.upper, a.lower + b.lower}; }
Spinor operator-(const Spinor& a, const Spinor& b) { return {a.upper - b.upper, a.lower - b.lower}; }
Spinor operator*(Complex s, const Spinor& v) { return {s * v.upper, s * v.lower}; }

Mat2 Mat2::adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c, lhs.d + rhs.d};
}

Mat2 operator-(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c, lhs.d - rhs.d};
}

Spinor operator*(const Mat2& m, const Spinor& v) {
    return {m.a * v.upper + m.b * v.lower, m.c * v.upper + m.d * v.lower};
}

double max_entry_distance(const Mat2& lhs, const Mat2& rhs) {
    double e = std::abs(lhs.a - rhs.a);
    e = std::max(e, std::abs(lhs.b - rhs.b));
    e = std::max(e, std::abs(lhs.c - rhs.c));
    e = std::max(e, std::abs(lhs.d - rhs.d));
    return e;
}

Mat2 pauli_matrix(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::x: return {0.0, 1.0, 1.0, 0.0};
        case PauliAxis::y: return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
        case PauliAxis::z: return {1.0, 0.0, 0.0, -1.0};
    }
    throw std::logic_error("pauli_matrix: bad axis");
}

double expectation_value(const Spinor& state, PauliAxis axis) {
    if (std::abs(state.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("expectation_value: state is not unit-normalized");
    }
    return inner(state, pauli_matrix(axis) * state).real();
}

double dispersion_momentum(double E, double m) {
    if (!(m > 0.0) || !std::isfinite(E)) {
        throw std::invalid_argument("dispersion_momentum: need finite E and m > 0");
    }
    const double absE = std::abs(E);
    if (absE < m) {
        throw std::domain_error("dispersion_momentum: |E| < m lies in the forbidden band");
    }
    // (|E| - m)(|E| + m) avoids the cancellation in E^2 - m^2 near the band edge.
    return std::sqrt((absE - m) * (absE + m));
}

double ChiralityState::group_velocity() const {
    return branch == Branch::plus ? momentum / kinetic_energy : -momentum / kinetic_energy;
}

double ChiralityState::spatial_momentum() const {
    return branch == Branch::plus ? momentum : -momentum;
}

ChiralityState chirality_state(double E, double p, double m, Branch branch) {
    if (!(m > 0.0) || !std::isfinite(E) || !std::isfinite(p)) {
        throw std::invalid_argument("chirality_state: need finite (E, p) and m > 0");
    }
    const double scale = std::max({E * E, p * p + m * m, 1.0});
    if (std::abs(E * E - p * p - m * m) > kAlgebraTol * scale) {
        throw std::invalid_argument("chirality_state: (E, p, m) violates E^2 = p^2 + m^2");
    }
    const double lower = branch == Branch::plus ? E - p : E + p;
    const double n = std::sqrt(m * m + lower * lower);
    ChiralityState s;
    s.spinor = Spinor{Complex(m / n, 0.0), Complex(lower / n, 0.0)};
    s.kinetic_energy = E;
    s.momentum = p;
    s.branch = branch;
    return s;
}

}  // namespace diracwv
