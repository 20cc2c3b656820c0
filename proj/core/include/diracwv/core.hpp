#pragma once

#include <complex>
#include <stdexcept>

// Shared vocabulary for the 1+1D Dirac toolkit: complex 2-spinors, Pauli
// operators, the relativistic dispersion relation, and chirality states.
// Everything is expressed in natural units (hbar = c = 1); all quantities
// are dimensionless.

namespace diracwv {

using Complex = std::complex<double>;

// Tolerance policy: algebraic identities are held to 1e-12 relative,
// normalization checks to 1e-9.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kNormTol = 1e-9;

/// Mass and step height shared by the scattering-side modules.
struct PhysParams {
    double m = 1.0;   ///< rest mass, must be > 0
    double V0 = 0.0;  ///< step height, any finite sign

    void validate() const;
};

/// Two-component chirality spinor.
struct Spinor {
    Complex upper{0.0, 0.0};
    Complex lower{0.0, 0.0};

    double norm2() const { return std::norm(upper) + std::norm(lower); }
    double norm() const;
    Spinor normalized() const;
};

/// Inner product <bra|ket> (conjugate-linear in the first slot).
Complex inner(const Spinor& bra, const Spinor& ket);

Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator*(Complex s, const Spinor& v);

/// 2x2 complex matrix, [[a, b], [c, d]].
struct Mat2 {
    Complex a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    Mat2 adjoint() const;
    Complex det() const { return a * d - b * c; }
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(Complex s, const Mat2& m);
Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
Spinor operator*(const Mat2& m, const Spinor& v);

/// Largest entry-wise absolute difference, used for operator-norm style
/// error measurements in convergence studies.
double max_entry_distance(const Mat2& lhs, const Mat2& rhs);

enum class PauliAxis { x, y, z };

/// The standard Pauli matrix for the axis (Hermitian, unitary, traceless).
Mat2 pauli_matrix(PauliAxis axis);

/// <state|sigma_axis|state> for a unit-norm state; real by Hermiticity and
/// bounded by 1 in magnitude. Throws std::invalid_argument if the norm
/// deviates from 1 by more than kNormTol.
double expectation_value(const Spinor& state, PauliAxis axis);

/// Momentum magnitude p = +sqrt(E^2 - m^2) from the dispersion relation.
/// Throws std::domain_error for |E| < m (forbidden band).
double dispersion_momentum(double E, double m);

/// Chirality branch labels: plus states carry spinor [m, E - p] on the
/// plane wave e^{+ipx}; minus states carry [m, E + p] on e^{-ipx}.
enum class Branch { plus, minus };

/// A propagating plane-wave chirality: unit-norm real spinor labeled by
/// kinetic energy, momentum, and branch.
struct ChiralityState {
    Spinor spinor;
    double kinetic_energy = 0.0;  ///< E, signed (negative in the sea)
    double momentum = 0.0;        ///< p, signed, branch convention below
    Branch branch = Branch::plus;

    /// Group velocity <sigma_z>: p/E for plus, -p/E for minus.
    double group_velocity() const;
    /// Momentum of the spatial plane wave: +p for plus, -p for minus.
    double spatial_momentum() const;
};

/// Builds the normalized chirality state for a consistent (E, p, m) triple.
/// Throws std::invalid_argument when E^2 != p^2 + m^2 within kAlgebraTol
/// (relative) or when the inputs are not finite.
ChiralityState chirality_state(double E, double p, double m, Branch branch);

}  // namespace diracwv
