#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sngate/pump.hpp"

using namespace sngate;
using oracles::rel_diff;

TEST_CASE("steady_state_population: n(0) = W_ex * T_s") {
    CHECK(steady_state_population({.excitation_rate_per_s = 0.0, .lifetime_s = 1e-3}) == 0.0);
    CHECK(steady_state_population({.excitation_rate_per_s = 10.0, .lifetime_s = 1e-3}) ==
          doctest::Approx(0.01).epsilon(1e-14));
    CHECK(steady_state_population({.excitation_rate_per_s = 200.0, .lifetime_s = 1e-3}) ==
          doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("evolve_population: constant drive from the fixed point stays put") {
    const PumpParams params{.excitation_rate_per_s = 200.0, .lifetime_s = 1e-3};
    const double n_star = steady_state_population(params);
    DriveSchedule schedule;
    schedule.segments = {{10.0 * params.lifetime_s, params.excitation_rate_per_s}};
    for (const auto& sample :
         evolve_population(n_star, schedule, params.lifetime_s, params.lifetime_s / 7.0)) {
        CHECK(sample.population == n_star);  // bitwise: the gap term is exactly zero
    }
}

TEST_CASE("evolve_population: switch-on approaches the plateau") {
    const double lifetime = 1e-3;
    DriveSchedule schedule;
    schedule.segments = {{10.0 * lifetime, 200.0}};
    const auto trace = evolve_population(0.0, schedule, lifetime, lifetime / 10.0);
    const auto& last = trace.back();
    CHECK(last.time_s == doctest::Approx(10.0 * lifetime).epsilon(1e-14));
    // deviation from the plateau is exp(-10) of the initial gap
    const double expected = 0.2 * (1.0 - 4.5399929762484854e-05);
    CHECK(rel_diff(last.population, expected) <= 1e-12);
}

TEST_CASE("evolve_population: free decay reaches n0/e after one lifetime") {
    const double lifetime = 2.5e-3;
    DriveSchedule schedule;
    schedule.segments = {{lifetime, 0.0}};
    const auto trace = evolve_population(0.8, schedule, lifetime, lifetime);
    CHECK(rel_diff(trace.back().population, 0.8 / std::numbers::e) <= 1e-12);
}

TEST_CASE("evolve_population: matches the RK4 reference integrator") {
    std::mt19937 rng(20240803);
    std::uniform_real_distribution<double> rate(0.0, 500.0);
    std::uniform_real_distribution<double> length(0.1, 5.0);
    std::uniform_real_distribution<double> start(0.0, 1.0);
    const double lifetime = 1e-3;
    for (int trial = 0; trial < 25; ++trial) {
        DriveSchedule schedule;
        const int segments = 1 + static_cast<int>(rng() % 5);
        for (int s = 0; s < segments; ++s)
            schedule.segments.push_back({length(rng) * lifetime, rate(rng)});
        const double n_init = start(rng);
        const auto trace = evolve_population(n_init, schedule, lifetime, lifetime / 3.0);

        std::vector<double> times;
        times.reserve(trace.size());
        for (const auto& sample : trace) times.push_back(sample.time_s);
        const auto reference = oracles::rk4_population(n_init, schedule, lifetime, times);
        REQUIRE(reference.size() == trace.size());
        for (std::size_t i = 0; i < trace.size(); ++i)
            CHECK(rel_diff(trace[i].population, reference[i]) <= 1e-6);
    }
}

TEST_CASE("evolve_population: stays non-negative and approaches monotonically") {
    std::mt19937 rng(606);
    std::uniform_real_distribution<double> rate(0.0, 300.0);
    std::uniform_real_distribution<double> start(0.0, 2.0);
    const double lifetime = 1e-3;
    for (int trial = 0; trial < 50; ++trial) {
        const double w_ex = rate(rng);
        DriveSchedule schedule;
        schedule.segments = {{8.0 * lifetime, w_ex}};
        const double target = w_ex * lifetime;
        const auto trace = evolve_population(start(rng), schedule, lifetime, lifetime / 4.0);
        double prev_gap = std::abs(trace.front().population - target);
        for (const auto& sample : trace) {
            CHECK(sample.population >= 0.0);
            const double gap = std::abs(sample.population - target);
            CHECK(gap <= prev_gap + 1e-15);
            prev_gap = gap;
        }
    }
}

TEST_CASE("evolve_population: boundary samples are exact and continuous") {
    DriveSchedule schedule;
    schedule.segments = {{1.0e-3, 100.0}, {0.7e-3, 0.0}, {2.0e-3, 50.0}};
    const auto trace = evolve_population(0.0, schedule, 1e-3, 0.3e-3);
    // every segment boundary appears exactly
    int boundaries_found = 0;
    double edge = 0.0;
    for (const auto& seg : schedule.segments) {
        edge += seg.duration_s;
        for (const auto& sample : trace)
            if (sample.time_s == doctest::Approx(edge).epsilon(1e-14)) {
                ++boundaries_found;
                break;
            }
    }
    CHECK(boundaries_found == 3);
    // times strictly increase
    for (std::size_t i = 1; i < trace.size(); ++i)
        CHECK(trace[i].time_s > trace[i - 1].time_s);
}

TEST_CASE("coupling_schedule: zero population means the coupling is off") {
    const DispersionModel ladder{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 0.2};
    const CouplingParams params{.gamma_n_mhz_per_koe = 4.3,
                                .hyperfine_koe_per_mub = 100.0,
                                .packet_sites = 20,
                                .separation_sites = 10};
    DriveSchedule off;
    off.segments = {{1e-3, 0.0}};
    const auto trace = evolve_population(0.0, off, 1e-3, 1e-4);
    for (const auto& row : coupling_schedule(trace, ladder, params)) {
        CHECK(row.coupling_hz == 0.0);
    }
}

TEST_CASE("coupling_schedule: plateau at n0/N = 0.01 sits at the 15 kHz benchmark") {
    const DispersionModel ladder{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 0.2};
    const CouplingParams params{.gamma_n_mhz_per_koe = 4.3,
                                .hyperfine_koe_per_mub = 100.0,
                                .packet_sites = 20,
                                .separation_sites = 10};
    // drive to steady state 0.2 and hold
    DriveSchedule hold;
    hold.segments = {{20e-3, 200.0}};
    const auto trace = evolve_population(0.2, hold, 1e-3, 5e-3);
    const auto table = coupling_schedule(trace, ladder, params);
    for (const auto& row : table) {
        CHECK(rel_diff(row.coupling_hz, 14789.667491960508) <= 1e-12);
        CHECK(std::abs(row.coupling_hz - 15000.0) <= 1500.0);
    }
    // halving the plateau halves the coupling
    const auto half_trace = evolve_population(0.1, DriveSchedule{{{20e-3, 100.0}}}, 1e-3, 5e-3);
    const auto half = coupling_schedule(half_trace, ladder, params);
    CHECK(half.back().coupling_hz == 0.5 * table.back().coupling_hz);
}

TEST_CASE("pump types: invariants enforced") {
    CHECK_THROWS_AS(steady_state_population({.excitation_rate_per_s = -1.0, .lifetime_s = 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(steady_state_population({.excitation_rate_per_s = 1.0, .lifetime_s = 0.0}),
                    std::domain_error);
    DriveSchedule bad;
    bad.segments = {{0.0, 5.0}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.segments = {{1.0, -5.0}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    DriveSchedule fine;
    fine.segments = {{1.0, 5.0}};
    CHECK_THROWS_AS(evolve_population(-0.1, fine, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(evolve_population(0.1, fine, 1.0, -0.1), std::domain_error);
}
