#include <benchmark/benchmark.h>

#include "sngate/coupling.hpp"
#include "sngate/gatesim.hpp"
#include "sngate/pump.hpp"

namespace {

using namespace sngate;

const DispersionModel ladder{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 0.2};

CouplingParams params_for(int sites) {
    return CouplingParams{.gamma_n_mhz_per_koe = 4.3,
                          .hyperfine_koe_per_mub = 100.0,
                          .packet_sites = sites,
                          .separation_sites = sites / 2};
}

void BM_lattice_sum(benchmark::State& state) {
    const int sites = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lattice_sum(sites, sites / 2));
}
BENCHMARK(BM_lattice_sum)->Arg(20)->Arg(64)->Arg(256)->Arg(1024);

void BM_range_function_k0(benchmark::State& state) {
    const auto params = params_for(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(range_function_k0(ladder, 0.2, params));
}
BENCHMARK(BM_range_function_k0)->Arg(20)->Arg(64)->Arg(256);

void BM_range_function_general(benchmark::State& state) {
    const int sites = static_cast<int>(state.range(0));
    const auto params = params_for(sites);
    const auto pops = MagnonPopulations::single_mode(sites, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(range_function_general(ladder, pops, params));
}
BENCHMARK(BM_range_function_general)->Arg(20)->Arg(64)->Arg(256);

void BM_coupling_sweep(benchmark::State& state) {
    const int sites = static_cast<int>(state.range(0));
    const auto params = params_for(sites);
    for (auto _ : state)
        benchmark::DoNotOptimize(coupling_vs_distance(ladder, 0.2, params, sites));
}
BENCHMARK(BM_coupling_sweep)->Arg(20)->Arg(64);

void BM_evolve_population(benchmark::State& state) {
    DriveSchedule schedule;
    schedule.segments = {{5e-3, 200.0}, {5e-3, 0.0}, {5e-3, 100.0}};
    const double dt = 1e-3 / static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve_population(0.0, schedule, 1e-3, dt));
}
BENCHMARK(BM_evolve_population)->Arg(10)->Arg(100)->Arg(1000);

void BM_cn_sequence_unitary(benchmark::State& state) {
    const auto seq = cn_sequence(15e3);
    const GateHamiltonian h{.coupling_hz = 15e3};
    for (auto _ : state) benchmark::DoNotOptimize(sequence_unitary(seq, h));
}
BENCHMARK(BM_cn_sequence_unitary);

void BM_finite_pulse_sequence(benchmark::State& state) {
    const auto seq = cn_sequence(15e3);
    const GateHamiltonian h{.coupling_hz = 15e3};
    const PulseSettings finite{false, 1e6};
    for (auto _ : state) benchmark::DoNotOptimize(sequence_unitary(seq, h, finite));
}
BENCHMARK(BM_finite_pulse_sequence);

void BM_gate_fidelity_optimized(benchmark::State& state) {
    const auto seq = cn_sequence(15e3);
    const GateHamiltonian h{.coupling_hz = 15e3};
    const auto u = sequence_unitary(seq, h);
    const auto cnot = ideal_cnot();
    for (auto _ : state) benchmark::DoNotOptimize(gate_fidelity(u, cnot, true));
}
BENCHMARK(BM_gate_fidelity_optimized);

} // namespace

BENCHMARK_MAIN();
