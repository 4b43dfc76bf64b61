#include "runner.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "sngate/addressing.hpp"
#include "sngate/coupling.hpp"
#include "sngate/dispersion.hpp"
#include "sngate/gatesim.hpp"
#include "sngate/pump.hpp"

namespace sngate::tools {

namespace {

// 17 significant digits: doubles round-trip exactly through the CSV.
std::string fmt(double value) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return buf.data();
}

void emit_dispersion(const Scenario& sc, std::ostream& out) {
    out << "n,k_over_pi,energy_hz\n";
    const int sites = sc.coupling.packet_sites;
    for (int n = 0; n <= sites; ++n) {
        out << n << ',' << fmt(static_cast<double>(n) / sites) << ','
            << fmt(magnon_energy_hz(sc.dispersion, n, sites, sc.constants)) << '\n';
    }
}

void emit_levels(const RunOptions& opt, std::ostream& out) {
    const Scenario& sc = opt.scenario;
    if (opt.level_steps < 2 || !(opt.level_max_koe > opt.level_min_koe))
        throw std::domain_error("levels: need max field > min field and at least 2 steps");
    out << "H_kOe,E_m_minus1_hz,E_m0_hz,E_m_plus1_hz\n";
    const double step = (opt.level_max_koe - opt.level_min_koe) / (opt.level_steps - 1);
    for (int i = 0; i < opt.level_steps; ++i) {
        const double field = opt.level_min_koe + i * step;
        out << fmt(field) << ',' << fmt(triplet_level_hz(sc.zeeman, -1, field, sc.constants))
            << ',' << fmt(triplet_level_hz(sc.zeeman, 0, field, sc.constants)) << ','
            << fmt(triplet_level_hz(sc.zeeman, +1, field, sc.constants)) << '\n';
    }
}

void emit_coupling(const RunOptions& opt, std::ostream& out) {
    const Scenario& sc = opt.scenario;
    const double n0 = opt.k0_occupation.value_or(sc.steady_population());
    const double w = range_function_k0(sc.dispersion, n0, sc.coupling, sc.constants);
    out << "r,W_hz,W_abs_hz\n";
    out << sc.coupling.separation_sites << ',' << fmt(w) << ',' << fmt(std::abs(w)) << '\n';
}

void emit_sweep(const RunOptions& opt, std::ostream& out) {
    const Scenario& sc = opt.scenario;
    const double n0 = opt.k0_occupation.value_or(sc.steady_population());
    const int r_max = opt.max_separation.value_or(sc.coupling.packet_sites);
    const auto rows = coupling_vs_distance(sc.dispersion, n0, sc.coupling, r_max, sc.constants);
    out << "r,W_hz,W_abs_hz\n";
    for (const auto& row : rows)
        out << row.separation_sites << ',' << fmt(row.coupling_hz) << ','
            << fmt(std::abs(row.coupling_hz)) << '\n';
}

void emit_pump(const RunOptions& opt, std::ostream& out) {
    const Scenario& sc = opt.scenario;
    if (sc.schedule.segments.empty())
        throw std::domain_error("pump: the scenario has an empty drive schedule");
    const double dt = opt.sample_dt_s.value_or(sc.pump.lifetime_s / 50.0);
    const auto trace = evolve_population(0.0, sc.schedule, sc.pump.lifetime_s, dt);
    const auto table = coupling_schedule(trace, sc.dispersion, sc.coupling, sc.constants);
    out << "t_s,n0,W_hz\n";
    for (const auto& row : table)
        out << fmt(row.time_s) << ',' << fmt(row.population) << ',' << fmt(row.coupling_hz)
            << '\n';
}

void emit_address(const RunOptions& opt, std::ostream& out) {
    const Scenario& sc = opt.scenario;
    LocalFields fields = sc.effective_fields();
    if (opt.packet_shift_koe) fields.packet_shift_koe = *opt.packet_shift_koe;
    if (opt.conditional_shift_koe) fields.conditional_shift_koe = *opt.conditional_shift_koe;
    out << "qubit,position,field_kOe,omega_plus_mhz,omega_minus_mhz\n";
    for (std::size_t i = 0; i < sc.layout.qubit_positions.size(); ++i) {
        const int site = sc.layout.qubit_positions[i];
        const auto freqs = target_frequencies(sc.layout, static_cast<int>(i), fields,
                                              sc.coupling.gamma_n_mhz_per_koe);
        out << i << ',' << site << ',' << fmt(local_field_koe(sc.layout, site)) << ','
            << fmt(freqs.omega_plus_mhz) << ',' << fmt(freqs.omega_minus_mhz) << '\n';
    }
}

void emit_gate(const RunOptions& opt, std::ostream& out) {
    const Scenario& sc = opt.scenario;
    const double w = opt.gate_w_hz.value_or(sc.gate_coupling_hz());
    PulseSequence seq = cn_sequence(w);
    if (opt.gate_tau_s) {
        for (auto& event : seq.events)
            if (auto* free = std::get_if<FreeEvolution>(&event)) free->duration_s = *opt.gate_tau_s;
        seq.validate();
    }
    const GateHamiltonian h{.coupling_hz = w,
                            .control_detuning_hz = sc.gate.control_detuning_hz,
                            .target_detuning_hz = sc.gate.target_detuning_hz};
    const PulseSettings pulses{.ideal = sc.gate.ideal_pulses, .rabi_hz = sc.gate.rabi_hz};
    const auto u = sequence_unitary(seq, h, pulses);
    const auto table = truth_table(u);

    static constexpr const char* labels[4] = {"00", "01", "10", "11"};
    out << "in_state,p00,p01,p10,p11\n";
    for (int in = 0; in < 4; ++in) {
        out << labels[in];
        for (int o = 0; o < 4; ++o) out << ',' << fmt(table(in, o));
        out << '\n';
    }
    // Final row: optimized and raw fidelity against the ideal CN gate in the
    // first two value columns.
    const double f_opt = gate_fidelity(u, ideal_cnot(), true);
    const double f_raw = gate_fidelity(u, ideal_cnot(), false);
    out << "fidelity," << fmt(f_opt) << ',' << fmt(f_raw) << ",0,0\n";
}

void emit_reproduce(std::ostream& out) {
    // The built-in reference benchmark, independent of any loaded config.
    const Scenario sc = Scenario::reference();
    const double w = sc.steady_coupling_hz();
    const double reference_khz = 15.0;
    out << "W_hz,W_abs_khz,reference_khz,relative_deviation\n";
    out << fmt(w) << ',' << fmt(std::abs(w) / 1000.0) << ',' << fmt(reference_khz) << ','
        << fmt((std::abs(w) / 1000.0 - reference_khz) / reference_khz) << '\n';
}

} // namespace

int run_command(const RunOptions& options, std::ostream& out, std::ostream& err) {
    try {
        options.scenario.validate();
        if (options.subcommand == "dispersion") {
            emit_dispersion(options.scenario, out);
        } else if (options.subcommand == "levels") {
            emit_levels(options, out);
        } else if (options.subcommand == "coupling") {
            emit_coupling(options, out);
        } else if (options.subcommand == "sweep") {
            emit_sweep(options, out);
        } else if (options.subcommand == "pump") {
            emit_pump(options, out);
        } else if (options.subcommand == "address") {
            emit_address(options, out);
        } else if (options.subcommand == "gate") {
            emit_gate(options, out);
        } else if (options.subcommand == "reproduce") {
            emit_reproduce(out);
        } else {
            err << "sngate: unknown subcommand '" << options.subcommand << "'\n";
            return exit_usage_error;
        }
    } catch (const ScenarioError& e) {
        err << "sngate: config error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const std::exception& e) {
        err << "sngate: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

} // namespace sngate::tools
