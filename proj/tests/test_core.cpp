#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diracwv/core.hpp"

using namespace diracwv;

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrt8 = 2.8284271247461903;
}  // namespace

TEST_CASE("dispersion_momentum matches E^2 = p^2 + m^2") {
    CHECK(dispersion_momentum(1.0, 1.0) == 0.0);
    CHECK(dispersion_momentum(2.0, 1.0) == doctest::Approx(kSqrt3).epsilon(1e-14));
    CHECK(dispersion_momentum(-3.0, 1.0) == doctest::Approx(kSqrt8).epsilon(1e-14));
    CHECK_THROWS_AS(dispersion_momentum(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(dispersion_momentum(-0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(dispersion_momentum(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("pauli matrices: definitions and algebra") {
    const Mat2 sx = pauli_matrix(PauliAxis::x);
    const Mat2 sy = pauli_matrix(PauliAxis::y);
    const Mat2 sz = pauli_matrix(PauliAxis::z);

    CHECK(sz.a == Complex{1.0, 0.0});
    CHECK(sz.d == Complex{-1.0, 0.0});
    CHECK(sx.b == Complex{1.0, 0.0});
    CHECK(sy.b == Complex{0.0, -1.0});
    CHECK(sy.c == Complex{0.0, 1.0});

    // sigma_a sigma_b + sigma_b sigma_a = 2 delta_ab I on all axis pairs
    const Mat2 sig[3] = {sx, sy, sz};
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const Mat2 anti = sig[a] * sig[b] + sig[b] * sig[a];
            const Mat2 expect = (a == b) ? Complex{2.0, 0.0} * Mat2::identity()
                                         : Complex{0.0, 0.0} * Mat2::identity();
            CHECK(max_entry_distance(anti, expect) < 1e-15);
        }
    }
    for (const Mat2& s : sig) {
        CHECK(std::abs(s.a + s.d) == 0.0);                                   // traceless
        CHECK(max_entry_distance(s.adjoint(), s) == 0.0);                    // Hermitian
        CHECK(max_entry_distance(s * s.adjoint(), Mat2::identity()) == 0.0); // unitary
    }
}

TEST_CASE("expectation_value on eigenstates and chirality states") {
    const Spinor up{1.0, 0.0};
    CHECK(expectation_value(up, PauliAxis::z) == 1.0);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(expectation_value(Spinor{h, h}, PauliAxis::x) == doctest::Approx(1.0).epsilon(1e-15));

    const ChiralityState sea = chirality_state(-3.0, kSqrt8, 1.0, Branch::plus);
    CHECK(expectation_value(sea.spinor, PauliAxis::z) ==
          doctest::Approx(-0.9428090415820635).epsilon(1e-13));

    CHECK_THROWS_AS(expectation_value(Spinor{1.0, 1.0}, PauliAxis::z), std::invalid_argument);
}

TEST_CASE("chirality_state examples") {
    SUBCASE("sea state, plus branch") {
        const ChiralityState s = chirality_state(-3.0, kSqrt8, 1.0, Branch::plus);
        // spinor proportional to [1, -3 - sqrt8]
        const double ratio = (s.spinor.lower / s.spinor.upper).real();
        CHECK(ratio == doctest::Approx(-3.0 - kSqrt8).epsilon(1e-14));
        CHECK(s.group_velocity() == doctest::Approx(kSqrt8 / -3.0).epsilon(1e-14));
        CHECK(s.spatial_momentum() == doctest::Approx(kSqrt8));
    }
    SUBCASE("transmitted state, minus branch") {
        const ChiralityState s = chirality_state(2.0, kSqrt3, 1.0, Branch::minus);
        const double ratio = (s.spinor.lower / s.spinor.upper).real();
        CHECK(ratio == doctest::Approx(2.0 + kSqrt3).epsilon(1e-14));
        CHECK(s.group_velocity() == doctest::Approx(-kSqrt3 / 2.0).epsilon(1e-14));
        CHECK(s.spatial_momentum() == doctest::Approx(-kSqrt3));
    }
    SUBCASE("rest state") {
        const ChiralityState s = chirality_state(1.0, 0.0, 1.0, Branch::plus);
        const double h = 1.0 / std::sqrt(2.0);
        CHECK(s.spinor.upper.real() == doctest::Approx(h).epsilon(1e-15));
        CHECK(s.spinor.lower.real() == doctest::Approx(h).epsilon(1e-15));
        CHECK(expectation_value(s.spinor, PauliAxis::z) == doctest::Approx(0.0));
    }
    SUBCASE("inconsistent triple rejected") {
        CHECK_THROWS_AS(chirality_state(2.0, 1.0, 1.0, Branch::plus), std::invalid_argument);
    }
}

TEST_CASE("chirality states: dispersion, normalization, velocity properties") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> um(0.05, 5.0);
    std::uniform_real_distribution<double> up(-8.0, 8.0);
    std::uniform_int_distribution<int> usign(0, 1);
    std::uniform_int_distribution<int> ubranch(0, 1);

    for (int i = 0; i < 20000; ++i) {
        const double m = um(rng);
        const double p = up(rng);
        const double E = (usign(rng) ? 1.0 : -1.0) * std::hypot(p, m);
        const Branch br = ubranch(rng) ? Branch::plus : Branch::minus;
        const ChiralityState s = chirality_state(E, p, m, br);

        const double scale = std::max(E * E, 1.0);
        CHECK(std::abs(E * E - p * p - m * m) <= 1e-12 * scale);
        CHECK(std::abs(s.spinor.norm() - 1.0) <= 1e-12);
        // propagating states are real vectors
        CHECK(s.spinor.upper.imag() == 0.0);
        CHECK(s.spinor.lower.imag() == 0.0);

        const double v = expectation_value(s.spinor, PauliAxis::z);
        const double expected = br == Branch::plus ? p / E : -p / E;
        CHECK(std::abs(v - expected) <= 1e-12);
        CHECK(std::abs(v) <= 1.0 + 1e-12);
    }
}

TEST_CASE("sigma_z eigenstates are orthogonal, generic chirality pairs are not") {
    CHECK(std::abs(inner(Spinor{1.0, 0.0}, Spinor{0.0, 1.0})) == 0.0);
    const ChiralityState a = chirality_state(-3.0, kSqrt8, 1.0, Branch::plus);
    const ChiralityState b = chirality_state(2.0, kSqrt3, 1.0, Branch::minus);
    CHECK(std::abs(inner(a.spinor, b.spinor)) > 0.1);

    // |E^+> at (E, p) and |E^-> at (E, -p) are the same ray, overlap 1
    const ChiralityState c = chirality_state(-3.0, -kSqrt8, 1.0, Branch::minus);
    CHECK(std::abs(inner(a.spinor, c.spinor) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("PhysParams validation") {
    CHECK_NOTHROW((PhysParams{1.0, -3.0}.validate()));
    CHECK_THROWS_AS((PhysParams{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PhysParams{-1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PhysParams{1.0, std::nan("")}.validate()), std::invalid_argument);
}
