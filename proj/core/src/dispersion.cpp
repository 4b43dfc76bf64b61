#include "sngate/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sngate {

double DispersionModel::band_coefficient_k() const {
    return exchange_k * (exchange_ratio - exchange_ratio * exchange_ratio * exchange_ratio / 4.0);
}

void DispersionModel::validate() const {
    if (!std::isfinite(offset_k))
        throw std::domain_error("DispersionModel.offset_k: must be finite");
    if (!(std::isfinite(exchange_k) && exchange_k > 0.0))
        throw std::domain_error("DispersionModel.exchange_k: must be finite and > 0");
    if (!(std::isfinite(exchange_ratio) && exchange_ratio > 0.0 && exchange_ratio < 2.0))
        throw std::domain_error("DispersionModel.exchange_ratio: must be in (0, 2)");
    if (!(band_coefficient_k() > 0.0))
        throw std::domain_error("DispersionModel: band coefficient J*(j1 - j1^3/4) must be > 0");
}

double magnon_energy_hz(const DispersionModel& model, int band_index, int packet_sites,
                        const PhysicalConstants& pc) {
    model.validate();
    if (packet_sites < 2)
        throw std::domain_error("magnon_energy_hz: packet_sites must be >= 2");
    if (band_index < 0 || band_index > packet_sites)
        throw std::domain_error("magnon_energy_hz: band_index out of range [0, " +
                                std::to_string(packet_sites) + "]");
    const double k = std::numbers::pi * band_index / packet_sites;
    return kelvin_to_hz(model.offset_k + model.band_coefficient_k() * std::cos(k), pc);
}

BandExtrema band_extrema(const DispersionModel& model, const PhysicalConstants& pc) {
    model.validate();
    const double band_k = model.band_coefficient_k();
    return BandExtrema{
        .min_hz = kelvin_to_hz(model.offset_k - band_k, pc),
        .max_hz = kelvin_to_hz(model.offset_k + band_k, pc),
        .bandwidth_hz = kelvin_to_hz(2.0 * band_k, pc),
    };
}

void ZeemanModel::validate() const {
    if (!(std::isfinite(gap_k) && gap_k > 0.0))
        throw std::domain_error("ZeemanModel.gap_k: must be finite and > 0");
    if (!(std::isfinite(g) && g > 0.0))
        throw std::domain_error("ZeemanModel.g: must be finite and > 0");
}

double triplet_level_hz(const ZeemanModel& zeeman, int m, double field_koe,
                        const PhysicalConstants& pc) {
    zeeman.validate();
    pc.validate();
    if (m != -1 && m != 0 && m != 1)
        throw std::domain_error("triplet_level_hz: m must be -1, 0 or +1");
    if (!(std::isfinite(field_koe) && field_koe >= 0.0))
        throw std::domain_error("triplet_level_hz: field must be finite and >= 0");
    const double field_oe = field_koe * 1000.0;
    return kelvin_to_hz(zeeman.gap_k, pc) + m * zeeman.g * pc.zeeman_hz_per_oe * field_oe;
}

double resonance_field_koe(const ZeemanModel& zeeman, int m, double frequency_hz,
                           const PhysicalConstants& pc) {
    zeeman.validate();
    pc.validate();
    if (m == 0)
        throw std::domain_error("resonance_field_koe: the m = 0 branch is flat, no unique field");
    if (m != -1 && m != 1)
        throw std::domain_error("resonance_field_koe: m must be -1 or +1");
    if (!(std::isfinite(frequency_hz) && frequency_hz > 0.0))
        throw std::domain_error("resonance_field_koe: frequency must be finite and > 0");
    const double slope_hz_per_oe = m * zeeman.g * pc.zeeman_hz_per_oe;
    const double field_oe = (frequency_hz - kelvin_to_hz(zeeman.gap_k, pc)) / slope_hz_per_oe;
    if (field_oe < 0.0)
        throw std::domain_error("resonance_field_koe: branch does not reach this frequency "
                                "at any non-negative field");
    return field_oe / 1000.0;
}

} // namespace sngate
