#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "sngate/constants.hpp"

using namespace sngate;

TEST_CASE("kelvin_to_hz: pinned conversion values") {
    CHECK(kelvin_to_hz(0.0) == 0.0);
    // CODATA k_B/h = 2.0836619...e10 Hz/K
    CHECK(kelvin_to_hz(1.0) == doctest::Approx(2.0836619e10).epsilon(1e-14));
    // 50 K, the exchange scale of the reference scenario
    CHECK(kelvin_to_hz(50.0) == doctest::Approx(1.04183095e12).epsilon(1e-14));
    // sign-preserving
    CHECK(kelvin_to_hz(-1.0) == -kelvin_to_hz(1.0));
}

TEST_CASE("kelvin_to_hz: rejects non-finite input") {
    CHECK_THROWS_AS(kelvin_to_hz(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(kelvin_to_hz(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("kelvin_to_hz: exactly linear under power-of-two scaling") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> temp(-300.0, 300.0);
    for (int i = 0; i < 200; ++i) {
        const double t = temp(rng);
        for (const double a : {2.0, 4.0, 0.5, 0.25, 1024.0}) {
            CHECK(kelvin_to_hz(a * t) == a * kelvin_to_hz(t));
        }
    }
}

TEST_CASE("field_to_nuclear_mhz: pinned values") {
    // gamma_n/(2 pi) = 4.3 MHz/kOe (protons) at 100 kOe
    CHECK(field_to_nuclear_mhz(100.0, 4.3) == doctest::Approx(430.0).epsilon(1e-14));
    CHECK(field_to_nuclear_mhz(0.0, 4.3) == 0.0);
    CHECK(field_to_nuclear_mhz(1.0, 4.3) == doctest::Approx(4.3).epsilon(1e-14));
}

TEST_CASE("field_to_nuclear_mhz: additive in the field") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> field(0.0, 500.0);
    for (int i = 0; i < 200; ++i) {
        const double h1 = field(rng);
        const double h2 = field(rng);
        const double whole = field_to_nuclear_mhz(h1 + h2, 4.3);
        const double parts = field_to_nuclear_mhz(h1, 4.3) + field_to_nuclear_mhz(h2, 4.3);
        CHECK(oracles::rel_diff(whole, parts) <= 1e-12);
    }
}

TEST_CASE("field_to_nuclear_mhz: input validation") {
    CHECK_THROWS_AS(field_to_nuclear_mhz(std::numeric_limits<double>::infinity(), 4.3),
                    std::domain_error);
    CHECK_THROWS_AS(field_to_nuclear_mhz(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(field_to_nuclear_mhz(1.0, -4.3), std::domain_error);
}

TEST_CASE("PhysicalConstants: invariants enforced") {
    PhysicalConstants pc;
    CHECK_NOTHROW(pc.validate());
    pc.kb_hz_per_kelvin = -1.0;
    CHECK_THROWS_AS(pc.validate(), std::domain_error);
    pc = PhysicalConstants{};
    pc.electron_g = 0.0;
    CHECK_THROWS_AS(pc.validate(), std::domain_error);
}
