#ifndef SNGATE_TOOLS_RUNNER_HPP
#define SNGATE_TOOLS_RUNNER_HPP

#include <optional>
#include <ostream>
#include <string>

#include "sngate/scenario.hpp"

namespace sngate::tools {

// Exit codes shared by the runner and the CLI wrapper.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

struct RunOptions {
    std::string subcommand;  // dispersion | levels | coupling | sweep | pump |
                             // address | gate | reproduce
    Scenario scenario;

    // Subcommand-specific overrides.
    std::optional<double> k0_occupation;  // coupling, sweep: n(0) instead of steady state
    std::optional<int> max_separation;    // sweep: default packet_sites
    std::optional<double> sample_dt_s;    // pump: default lifetime/50
    std::optional<double> gate_w_hz;      // gate: coupling override
    std::optional<double> gate_tau_s;     // gate: replace the free-evolution time
    std::optional<double> packet_shift_koe;       // address: h_tr
    std::optional<double> conditional_shift_koe;  // address: h_SN
    double level_min_koe = 0.0;           // levels sweep range
    double level_max_koe = 200.0;
    int level_steps = 101;
};

// Runs one subcommand against the scenario and writes a CSV table to `out`.
// Returns an exit code; diagnostics go to `err`. Identical options produce
// byte-identical output (all values printed with 17 significant digits).
int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);

} // namespace sngate::tools

#endif
