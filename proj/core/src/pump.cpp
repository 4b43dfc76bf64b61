#include "sngate/pump.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sngate {

void PumpParams::validate() const {
    if (!(std::isfinite(excitation_rate_per_s) && excitation_rate_per_s >= 0.0))
        throw std::domain_error("PumpParams.excitation_rate_per_s: must be finite and >= 0");
    if (!(std::isfinite(lifetime_s) && lifetime_s > 0.0))
        throw std::domain_error("PumpParams.lifetime_s: must be finite and > 0");
}

double DriveSchedule::total_duration_s() const {
    double total = 0.0;
    for (const auto& seg : segments) total += seg.duration_s;
    return total;
}

void DriveSchedule::validate() const {
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (!(std::isfinite(segments[i].duration_s) && segments[i].duration_s > 0.0))
            throw std::domain_error("DriveSchedule.segments[" + std::to_string(i) +
                                    "].duration_s: must be finite and > 0");
        if (!(std::isfinite(segments[i].excitation_rate_per_s) &&
              segments[i].excitation_rate_per_s >= 0.0))
            throw std::domain_error("DriveSchedule.segments[" + std::to_string(i) +
                                    "].excitation_rate_per_s: must be finite and >= 0");
    }
}

double steady_state_population(const PumpParams& params) {
    params.validate();
    return params.excitation_rate_per_s * params.lifetime_s;
}

std::vector<PopulationSample> evolve_population(double initial_population,
                                                const DriveSchedule& schedule,
                                                double lifetime_s, double sample_dt_s) {
    schedule.validate();
    if (!(std::isfinite(initial_population) && initial_population >= 0.0))
        throw std::domain_error("evolve_population: initial_population must be finite and >= 0");
    if (!(std::isfinite(lifetime_s) && lifetime_s > 0.0))
        throw std::domain_error("evolve_population: lifetime_s must be finite and > 0");
    if (!(std::isfinite(sample_dt_s) && sample_dt_s > 0.0))
        throw std::domain_error("evolve_population: sample_dt_s must be finite and > 0");

    std::vector<PopulationSample> trace;
    trace.push_back({0.0, initial_population});

    double segment_start_t = 0.0;
    double n_start = initial_population;
    for (const auto& seg : schedule.segments) {
        const double n_inf = seg.excitation_rate_per_s * lifetime_s;
        const double gap = n_start - n_inf;
        const double steps_d = std::ceil(seg.duration_s / sample_dt_s);
        if (!(steps_d <= 1.0e7))
            throw std::domain_error("evolve_population: sample_dt_s yields more than 1e7 "
                                    "samples in one segment");
        const long steps = std::max(1L, static_cast<long>(steps_d));
        // Exact relaxation at local times i*dt; the segment end is always
        // sampled exactly so traces stay continuous across boundaries.
        for (long i = 1; i < steps; ++i) {
            const double t_local = i * sample_dt_s;
            if (t_local >= seg.duration_s) break;
            const double n = n_inf + gap * std::exp(-t_local / lifetime_s);
            trace.push_back({segment_start_t + t_local, n});
        }
        const double n_end = n_inf + gap * std::exp(-seg.duration_s / lifetime_s);
        trace.push_back({segment_start_t + seg.duration_s, n_end});
        n_start = n_end;
        segment_start_t += seg.duration_s;
    }
    return trace;
}

std::vector<CouplingSample> coupling_schedule(std::span<const PopulationSample> trace,
                                              const DispersionModel& model,
                                              const CouplingParams& params,
                                              const PhysicalConstants& pc) {
    std::vector<CouplingSample> out;
    out.reserve(trace.size());
    for (const auto& sample : trace) {
        out.push_back({sample.time_s, sample.population,
                       range_function_k0(model, sample.population, params, pc)});
    }
    return out;
}

} // namespace sngate
