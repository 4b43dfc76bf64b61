#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sngate/dispersion.hpp"

using namespace sngate;
using oracles::rel_diff;

namespace {
const DispersionModel ladder{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 0.2};
const ZeemanModel zeeman{.gap_k = 50.0, .g = 2.0};
} // namespace

TEST_CASE("magnon_energy_hz: band edges and midpoint") {
    // J (j1 - j1^3/4) = 50 * 0.198 = 9.9 K
    CHECK(ladder.band_coefficient_k() == doctest::Approx(9.9).epsilon(1e-14));
    CHECK(magnon_energy_hz(ladder, 0, 20) == doctest::Approx(2.062825281e11).epsilon(1e-12));
    CHECK(magnon_energy_hz(ladder, 20, 20) == doctest::Approx(-2.062825281e11).epsilon(1e-12));
    // cos(pi/2) = 0 leaves only the offset
    const DispersionModel shifted{.offset_k = 5.0, .exchange_k = 50.0, .exchange_ratio = 0.2};
    CHECK(magnon_energy_hz(shifted, 10, 20) ==
          doctest::Approx(kelvin_to_hz(5.0)).epsilon(1e-12));
}

TEST_CASE("magnon_energy_hz: band index range enforced") {
    CHECK_THROWS_AS(magnon_energy_hz(ladder, -1, 20), std::domain_error);
    CHECK_THROWS_AS(magnon_energy_hz(ladder, 21, 20), std::domain_error);
    CHECK_THROWS_AS(magnon_energy_hz(ladder, 0, 1), std::domain_error);
}

TEST_CASE("magnon_energy_hz: monotone from k = 0 down to k = pi") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ex(1.0, 200.0);
    std::uniform_real_distribution<double> ratio(0.05, 1.9);
    std::uniform_real_distribution<double> off(-10.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const DispersionModel m{.offset_k = off(rng), .exchange_k = ex(rng),
                                .exchange_ratio = ratio(rng)};
        const int sites = 2 + static_cast<int>(rng() % 63);
        double prev = magnon_energy_hz(m, 0, sites);
        for (int n = 1; n <= sites; ++n) {
            const double e = magnon_energy_hz(m, n, sites);
            CHECK(e <= prev);
            prev = e;
        }
    }
}

TEST_CASE("band_extrema: width and midpoint") {
    const auto ext = band_extrema(ladder);
    CHECK(ext.bandwidth_hz == doctest::Approx(kelvin_to_hz(19.8)).epsilon(1e-12));
    CHECK(ext.max_hz == doctest::Approx(kelvin_to_hz(9.9)).epsilon(1e-12));
    CHECK(ext.min_hz == doctest::Approx(-kelvin_to_hz(9.9)).epsilon(1e-12));

    const DispersionModel shifted{.offset_k = 5.0, .exchange_k = 50.0, .exchange_ratio = 0.2};
    const auto ext2 = band_extrema(shifted);
    CHECK((ext2.min_hz + ext2.max_hz) / 2.0 == doctest::Approx(kelvin_to_hz(5.0)).epsilon(1e-12));

    // flat-band limit: the width vanishes linearly with j1
    const DispersionModel flat{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 1e-9};
    CHECK(band_extrema(flat).bandwidth_hz <= kelvin_to_hz(2.0 * 50.0 * 1e-9) * (1.0 + 1e-12));
    const DispersionModel flatter{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 1e-10};
    CHECK(rel_diff(band_extrema(flatter).bandwidth_hz, band_extrema(flat).bandwidth_hz / 10.0) <=
          1e-9);
}

TEST_CASE("DispersionModel: invariants enforced") {
    DispersionModel bad = ladder;
    bad.exchange_k = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = ladder;
    bad.exchange_ratio = 2.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.exchange_ratio = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("triplet_level_hz: the three branches") {
    // m = 0 branch is flat at the gap
    CHECK(triplet_level_hz(zeeman, 0, 0.0) == kelvin_to_hz(50.0));
    CHECK(triplet_level_hz(zeeman, 0, 123.0) == kelvin_to_hz(50.0));
    // m = -1 descends: 1.0418e12 - 2*2.7992e6*1e5 Oe
    CHECK(triplet_level_hz(zeeman, -1, 100.0) ==
          doctest::Approx(4.8199095e11).epsilon(1e-12));
    // Zeeman splitting is symmetric about m = 0
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> field(0.0, 500.0);
    const PhysicalConstants pc;
    for (int i = 0; i < 100; ++i) {
        const double h = field(rng);
        const double up = triplet_level_hz(zeeman, +1, h);
        const double down = triplet_level_hz(zeeman, -1, h);
        CHECK(rel_diff(up - down, 2.0 * zeeman.g * pc.zeeman_hz_per_oe * h * 1000.0) <= 1e-12);
    }
}

TEST_CASE("triplet_level_hz: rejects invalid m") {
    CHECK_THROWS_AS(triplet_level_hz(zeeman, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(triplet_level_hz(zeeman, -2, 1.0), std::domain_error);
}

TEST_CASE("resonance_field_koe: inverts the descending branch") {
    // round trip at the reference point
    const double nu = triplet_level_hz(zeeman, -1, 100.0);
    CHECK(rel_diff(resonance_field_koe(zeeman, -1, nu), 100.0) <= 1e-12);
    // the gap frequency resonates at zero field
    CHECK(resonance_field_koe(zeeman, -1, kelvin_to_hz(50.0)) == 0.0);
    // frozen linear inversion: (1.0418e12 - 9e11) / (2 * 2.7992e6) / 1000 kOe
    CHECK(resonance_field_koe(zeeman, -1, 9.0e11) ==
          doctest::Approx(25.334193698199485).epsilon(1e-12));
}

TEST_CASE("resonance_field_koe: round trip across the working field range") {
    std::mt19937 rng(4321);
    std::uniform_real_distribution<double> field(0.1, 1000.0);
    for (int i = 0; i < 200; ++i) {
        const double h = field(rng);
        for (const int m : {-1, +1}) {
            const double nu = triplet_level_hz(zeeman, m, h);
            if (nu <= 0.0) continue;  // +1 never hits this; -1 beyond the gap field does
            CHECK(rel_diff(resonance_field_koe(zeeman, m, nu), h) <= 1e-9);
        }
    }
}

TEST_CASE("resonance_field_koe: error paths") {
    CHECK_THROWS_AS(resonance_field_koe(zeeman, 0, 1.0e11), std::domain_error);
    // on the ascending branch every frequency below the gap is unreachable
    CHECK_THROWS_AS(resonance_field_koe(zeeman, +1, 0.5 * kelvin_to_hz(50.0)),
                    std::domain_error);
}
