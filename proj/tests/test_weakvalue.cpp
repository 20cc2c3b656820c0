#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diracwv/weakvalue.hpp"
#include "sampling.hpp"

using namespace diracwv;
using diracwv::testing::Triple;

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrt8 = 2.8284271247461903;
// -5/(sqrt8 + sqrt3) and -1/(sqrt8 - sqrt3), frozen from direct evaluation
constexpr double kWSuper = -1.0963763171773129;
constexpr double kWSame = -0.9120955864630133;
}  // namespace

TEST_CASE("classify_regime") {
    CHECK(classify_regime(2.0, 5.0, 1.0) == Regime::supercritical_transmission);
    CHECK(classify_regime(3.0, 1.0, 1.0) == Regime::same_continuum_transmission);
    CHECK(classify_regime(3.0, -2.0, 1.0) == Regime::same_continuum_transmission);
    CHECK(classify_regime(1.5, 2.0, 1.0) == Regime::forbidden);
    CHECK(classify_regime(0.5, 5.0, 1.0) == Regime::forbidden);
    // boundary equalities carry zero flux
    CHECK(classify_regime(1.0, 5.0, 1.0) == Regime::forbidden);
    CHECK(classify_regime(3.0, 2.0, 1.0) == Regime::forbidden);  // E_f = V0 + m
    CHECK(classify_regime(2.0, 3.0, 1.0) == Regime::forbidden);  // E_f = V0 - m
    CHECK(classify_regime(-3.0, 0.0, 1.0) == Regime::subcritical_no_channel);
    CHECK_THROWS_AS(classify_regime(2.0, 5.0, 0.0), std::invalid_argument);
}

TEST_CASE("weak_value: pre = post reduces to the expectation value") {
    const ChiralityState s = chirality_state(-3.0, kSqrt8, 1.0, Branch::plus);
    const WeakValueResult w = weak_value(s, s, PauliAxis::z);
    CHECK(w.real_part == doctest::Approx(-0.9428090415820635).epsilon(1e-13));
    CHECK(w.imag_part == 0.0);
    CHECK_FALSE(w.strange);
}

TEST_CASE("weak_value: supercritical pre/post pair") {
    const ChiralityState pre = chirality_state(-3.0, kSqrt8, 1.0, Branch::plus);
    const ChiralityState post = chirality_state(2.0, kSqrt3, 1.0, Branch::minus);
    const WeakValueResult w = weak_value(pre, post, PauliAxis::z);
    CHECK(w.real_part == doctest::Approx(kWSuper).epsilon(1e-13));
    CHECK(w.imag_part == 0.0);
    CHECK(w.strange);
    CHECK(std::abs(w.overlap) > kOverlapTol);
}

TEST_CASE("weak_value: orthogonal post-selection diverges") {
    CHECK_THROWS_AS(weak_value(Spinor{1.0, 0.0}, Spinor{0.0, 1.0}, PauliAxis::z),
                    std::domain_error);
}

TEST_CASE("step_weak_value spot values") {
    const WeakValueResult w1 =
        step_weak_value(2.0, 5.0, 1.0, Regime::supercritical_transmission);
    CHECK(w1.real_part == doctest::Approx(kWSuper).epsilon(1e-13));
    CHECK(w1.strange);

    const WeakValueResult w2 =
        step_weak_value(3.0, 1.0, 1.0, Regime::same_continuum_transmission);
    CHECK(w2.real_part == doctest::Approx(kWSame).epsilon(1e-13));
    CHECK_FALSE(w2.strange);

    // V0 = 0 reduces to the ordinary group velocity -p_f/E_f
    const WeakValueResult w3 =
        step_weak_value(3.0, 0.0, 1.0, Regime::same_continuum_transmission);
    CHECK(w3.real_part == doctest::Approx(-kSqrt8 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(step_weak_value(1.5, 2.0, 1.0, Regime::supercritical_transmission),
                    std::domain_error);
    CHECK_THROWS_AS(step_weak_value(2.0, 5.0, 1.0, Regime::forbidden), std::domain_error);
}

TEST_CASE("strangeness iff supercritical, boundedness in the same continuum") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 10000; ++i) {
        const Triple s = diracwv::testing::sample_supercritical(rng);
        const WeakValueResult w =
            step_weak_value(s.E_f, s.V0, s.m, Regime::supercritical_transmission);
        CHECK(w.real_part < -1.0);
        CHECK(w.strange);
    }
    for (int i = 0; i < 10000; ++i) {
        const Triple s = diracwv::testing::sample_same_continuum(rng);
        const WeakValueResult w =
            step_weak_value(s.E_f, s.V0, s.m, Regime::same_continuum_transmission);
        CHECK(std::abs(w.real_part) < 1.0);
        CHECK_FALSE(w.strange);
    }
}

TEST_CASE("closed form agrees with the generic spinor weak value") {
    std::mt19937_64 rng(991);
    for (int i = 0; i < 4000; ++i) {
        const Regime regime = (i % 2 == 0) ? Regime::supercritical_transmission
                                           : Regime::same_continuum_transmission;
        const Triple s = diracwv::testing::sample_regime(regime, rng);
        const StepStates states = step_states(s.E_f, s.V0, s.m, regime);
        const WeakValueResult generic =
            weak_value(states.incident, states.transmitted, PauliAxis::z);
        const WeakValueResult closed = step_weak_value(s.E_f, s.V0, s.m, regime);
        CHECK(std::abs(generic.real_part - closed.real_part) <= 1e-12);
        // real spinors: exactly real weak values, for sigma_z and sigma_x alike
        CHECK(generic.imag_part == 0.0);
        CHECK(weak_value(states.incident, states.transmitted, PauliAxis::x).imag_part == 0.0);
    }
}
