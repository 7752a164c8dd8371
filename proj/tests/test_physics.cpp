// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wgcav/constants.hpp"
#include "wgcav/physics.hpp"

using namespace wgcav;
using constants::c_light;
using constants::pi;

TEST_CASE("atomic interaction volume for cesium D2") {
    const AtomicTransition cs = cesium_d2();
    CHECK(cs.gamma_perp == doctest::Approx(2 * pi * 2.61e6).epsilon(1e-15));
    // direct evaluation of 3 c lambda^2 / (4 pi gamma_perp), cross-checked by
    // independent hand computation: 3.1707121756e-12 m^3 (= 3.1707e6 um^3)
    const double va = atomic_interaction_volume(cs);
    CHECK(va == doctest::Approx(3.1707121756314565e-12).epsilon(1e-12));
}

TEST_CASE("interaction volume scalings") {
    AtomicTransition t = cesium_d2();
    const double va = atomic_interaction_volume(t);
    AtomicTransition t2 = t;
    t2.gamma_perp *= 2.0;
    CHECK(atomic_interaction_volume(t2) == doctest::Approx(va / 2).epsilon(1e-14));
    AtomicTransition t3 = t;
    t3.wavelength *= 2.0;
    CHECK(atomic_interaction_volume(t3) == doctest::Approx(va * 4).epsilon(1e-14));

    // homogeneity property: lambda -> s*lambda multiplies V_a by s^2
    oracles::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const double s = rng.uniform(0.1, 10.0);
        AtomicTransition ts = t;
        ts.wavelength *= s;
        CHECK(atomic_interaction_volume(ts) == doctest::Approx(va * s * s).epsilon(1e-13));
    }
}

TEST_CASE("kappa from Q") {
    const double lam = 852.359e-9;
    // Q = 1.2e8 -> kappa/2pi ~ 1.47 MHz
    const double kappa = kappa_from_q(lam, 1.2e8);
    CHECK(kappa / (2 * pi) == doctest::Approx(1.4655e6).epsilon(1e-3));
    // Q = 1e7 -> kappa/2pi ~ 17.6 MHz (Table I max-g row: g/2pi > 700 -> g/kappa ~ 40)
    const double kappa7 = kappa_from_q(lam, 1e7);
    CHECK(kappa7 / (2 * pi) == doctest::Approx(17.586e6).epsilon(1e-3));
    CHECK(703e6 / (kappa7 / (2 * pi)) == doctest::Approx(40.0).epsilon(2e-2));
    // Q -> infinity limit
    CHECK(kappa_from_q(lam, 1e300) < 1e-280);
    CHECK_THROWS_AS(kappa_from_q(lam, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kappa_from_q(lam, -5.0), std::invalid_argument);
}

TEST_CASE("Q from ringdown lifetime") {
    // tau = 22 ns at 852.359 nm -> Q_L = 0.48e8
    const double q = q_from_ringdown(22e-9, 852.359e-9);
    CHECK(q == doctest::Approx(4.8622e7).epsilon(1e-3));
    CHECK(q == doctest::Approx(0.48e8).epsilon(2e-2));
    // tau = 300 ns at 1550 nm -> ~3.6e8, same order as the quoted 4e8
    const double q2 = q_from_ringdown(300e-9, 1550e-9);
    CHECK(q2 == doctest::Approx(3.646e8).epsilon(1e-3));
    CHECK(q2 / 4e8 > 0.5);
    CHECK(q2 / 4e8 < 2.0);
    // tau -> 0
    CHECK(q_from_ringdown(1e-30, 852.359e-9) < 1e-12);
    CHECK_THROWS_AS(q_from_ringdown(0.0, 852.359e-9), std::invalid_argument);
}

TEST_CASE("kappa/Q/ringdown consistency identities") {
    oracles::Rng rng(202);
    for (int i = 0; i < 300; ++i) {
        const double lam = rng.uniform(1e-7, 1e-5);
        const double q = std::exp(rng.uniform(0.0, 27.0));
        CHECK(kappa_from_q(lam, q) * q * lam / (pi * c_light) == doctest::Approx(1.0).epsilon(1e-14));
        const double tau = std::exp(rng.uniform(-25.0, -5.0));
        const double kappa = kappa_from_q(lam, q_from_ringdown(tau, lam));
        CHECK(kappa == doctest::Approx(1.0 / (2 * tau)).epsilon(1e-14));
    }
}

TEST_CASE("refractive index models") {
    MaterialModel silica;
    CHECK(evaluate_index(silica, 852.359e-9) == doctest::Approx(1.45246166298).epsilon(1e-9));
    CHECK(evaluate_index(silica, 1550e-9) == doctest::Approx(1.4440236217).epsilon(1e-9));

    MaterialModel constant;
    constant.law = MaterialModel::IndexLaw::Constant;
    constant.constant_index = 1.45;
    CHECK(evaluate_index(constant, 400e-9) == 1.45);
    CHECK(evaluate_index(constant, 2000e-9) == 1.45);

    CHECK_THROWS_AS(evaluate_index(silica, 0.15e-6), std::domain_error);
    CHECK_THROWS_AS(evaluate_index(silica, 8e-6), std::domain_error);

    MaterialModel bad = constant;
    bad.constant_index = 1.0;
    CHECK_THROWS_AS(bad.validate_at(852e-9), std::invalid_argument);
    MaterialModel bad2 = silica;
    bad2.q_material = 0.0;
    CHECK_THROWS_AS(bad2.validate_at(852e-9), std::invalid_argument);
}
