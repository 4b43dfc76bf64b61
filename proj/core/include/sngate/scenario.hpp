#ifndef SNGATE_SCENARIO_HPP
#define SNGATE_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "sngate/addressing.hpp"
#include "sngate/constants.hpp"
#include "sngate/coupling.hpp"
#include "sngate/dispersion.hpp"
#include "sngate/gatesim.hpp"
#include "sngate/pump.hpp"

namespace sngate {

// Configuration errors (malformed JSON, unknown keys, invariant violations).
// Messages name the offending field.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GateSettings {
    std::optional<double> coupling_override_hz;  // default: steady-state W
    double control_detuning_hz = 0.0;
    double target_detuning_hz = 0.0;
    bool ideal_pulses = true;
    double rabi_hz = 1.0e6;
};

// One complete run description. JSON layout mirrors the struct: one object
// per block ("dispersion", "zeeman", "coupling", "pump", "layout", optional
// "fields", "gate", "constants"); values are plain numbers in the units
// fixed by each block's field names.
struct Scenario {
    PhysicalConstants constants;
    DispersionModel dispersion;
    ZeemanModel zeeman;
    CouplingParams coupling;
    PumpParams pump;
    DriveSchedule schedule;
    ChainLayout layout;
    std::optional<LocalFields> fields;  // explicit h_tr / h_SN override
    GateSettings gate;

    // Steady-state k=0 occupation and the coupling it produces.
    double steady_population() const;
    double steady_coupling_hz() const;

    // Gate coupling: the override when present, else the steady-state value.
    double gate_coupling_hz() const;

    // h_tr / h_SN: the explicit values when present, else h_SN from the
    // steady coupling via the doublet splitting 2*gamma_n*h_SN = |W| and
    // h_tr from the packet-moment heuristic.
    LocalFields effective_fields() const;

    void validate() const;  // throws ScenarioError naming the field

    // The built-in reference scenario: the parameter set whose coupling
    // benchmark is 15 kHz (N=20, r=10, A=100 kOe/mu_B, gamma_n=4.3 MHz/kOe,
    // J=50 K, j1=0.2, steady n0/N=0.01).
    static Scenario reference();

    static Scenario from_json_text(const std::string& text);
    static Scenario from_json_file(const std::string& path);
};

} // namespace sngate

#endif
