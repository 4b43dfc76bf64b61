// sngate: magnon-switched nuclear-qubit coupling and CN-gate calculator.
//
// Computes the Suhl-Nakamura inter-qubit coupling switched on by pumped
// k = 0 magnons in a gapped 1-D antiferromagnet, and simulates the
// resulting two-qubit CN gate as an NMR pulse sequence. Tables go to
// stdout or --out as CSV.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "runner.hpp"

int main(int argc, char** argv) {
    using namespace sngate::tools;

    CLI::App app{"Suhl-Nakamura coupling and NMR CN-gate toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    app.add_option("--config", config_path, "Scenario JSON; unset keys fall back to the built-in"
                                            " reference scenario")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "Write the table to this file instead of stdout");
    app.add_option("--format", format, "Output format (csv only)")
        ->check(CLI::IsMember({"csv"}));

    RunOptions options;

    auto* dispersion = app.add_subcommand("dispersion", "Magnon band over the packet grid");
    auto* levels = app.add_subcommand("levels", "Zeeman-split triplet levels vs field");
    levels->add_option("--h-min", options.level_min_koe, "Sweep start (kOe)");
    levels->add_option("--h-max", options.level_max_koe, "Sweep end (kOe)");
    levels->add_option("--h-steps", options.level_steps, "Number of rows");

    double n0 = 0.0, dt = 0.0, w_hz = 0.0, tau = 0.0, h_tr = 0.0, h_sn = 0.0;
    int r_max = 0;

    auto* coupling = app.add_subcommand("coupling", "Coupling at the configured separation");
    auto* n0_opt_c = coupling->add_option("--n0", n0, "k=0 occupation (default: steady state)");
    auto* sweep = app.add_subcommand("sweep", "Coupling vs qubit separation");
    auto* n0_opt_s = sweep->add_option("--n0", n0, "k=0 occupation (default: steady state)");
    auto* rmax_opt = sweep->add_option("--r-max", r_max, "Largest separation (default: N)");

    auto* pump = app.add_subcommand("pump", "Populations and coupling through the drive schedule");
    auto* dt_opt = pump->add_option("--dt", dt, "Sample spacing in s (default: lifetime/50)");

    auto* address = app.add_subcommand("address", "Qubit fields and NMR doublet frequencies");
    auto* htr_opt = address->add_option("--h-tr", h_tr, "Packet shift h_tr (kOe)");
    auto* hsn_opt = address->add_option("--h-sn", h_sn, "Conditional shift h_SN (kOe)");

    auto* gate = app.add_subcommand("gate", "CN-gate truth table and fidelity");
    auto* w_opt = gate->add_option("--w-hz", w_hz, "Coupling override (Hz)");
    auto* tau_opt = gate->add_option("--tau", tau, "Free-evolution time override (s)");

    auto* reproduce =
        app.add_subcommand("reproduce", "Reference coupling benchmark (15 kHz scenario)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        options.scenario = config_path.empty() ? sngate::Scenario::reference()
                                               : sngate::Scenario::from_json_file(config_path);
    } catch (const sngate::ScenarioError& e) {
        std::cerr << "sngate: " << e.what() << '\n';
        return exit_usage_error;
    }

    for (const auto& [sub, name] :
         std::initializer_list<std::pair<CLI::App*, const char*>>{
             {dispersion, "dispersion"}, {levels, "levels"}, {coupling, "coupling"},
             {sweep, "sweep"}, {pump, "pump"}, {address, "address"}, {gate, "gate"},
             {reproduce, "reproduce"}}) {
        if (sub->parsed()) options.subcommand = name;
    }
    if (n0_opt_c->count() || n0_opt_s->count()) options.k0_occupation = n0;
    if (rmax_opt->count()) options.max_separation = r_max;
    if (dt_opt->count()) options.sample_dt_s = dt;
    if (w_opt->count()) options.gate_w_hz = w_hz;
    if (tau_opt->count()) options.gate_tau_s = tau;
    if (htr_opt->count()) options.packet_shift_koe = h_tr;
    if (hsn_opt->count()) options.conditional_shift_koe = h_sn;

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "sngate: cannot open output file: " << out_path << '\n';
            return exit_usage_error;
        }
        return run_command(options, out, std::cerr);
    }
    return run_command(options, std::cout, std::cerr);
}
