#ifndef SNGATE_PUMP_HPP
#define SNGATE_PUMP_HPP

#include <span>
#include <vector>

#include "sngate/constants.hpp"
#include "sngate/coupling.hpp"
#include "sngate/dispersion.hpp"

namespace sngate {

// k = 0 magnon population under microwave drive:
//     dn/dt = W_ex - n/T_s
struct PumpParams {
    double excitation_rate_per_s;  // W_ex >= 0
    double lifetime_s;             // T_s > 0

    void validate() const;
};

// Piecewise-constant drive, e.g. switch-on / hold / switch-off.
struct DriveSegment {
    double duration_s;             // > 0
    double excitation_rate_per_s;  // >= 0
};

struct DriveSchedule {
    std::vector<DriveSegment> segments;

    double total_duration_s() const;
    void validate() const;
};

// Steady state of the rate equation: n(0) = W_ex * T_s.
double steady_state_population(const PumpParams& params);

struct PopulationSample {
    double time_s;
    double population;
};

// Integrates the rate equation through the schedule using the exact
// per-segment solution
//     n(t) = W_ex T_s + (n_start - W_ex T_s) exp(-t/T_s),
// sampled every sample_dt_s with segment boundaries always included. The
// trace starts with (0, initial) and is continuous across boundaries.
std::vector<PopulationSample> evolve_population(double initial_population,
                                                const DriveSchedule& schedule,
                                                double lifetime_s, double sample_dt_s);

struct CouplingSample {
    double time_s;
    double population;
    double coupling_hz;
};

// Maps a population trace through the k = 0 range function; W(t) inherits
// the linearity of the closed form in n(0).
std::vector<CouplingSample> coupling_schedule(std::span<const PopulationSample> trace,
                                              const DispersionModel& model,
                                              const CouplingParams& params,
                                              const PhysicalConstants& pc = {});

} // namespace sngate

#endif
