#include "sngate/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace sngate {

void PhysicalConstants::validate() const {
    if (!(std::isfinite(kb_hz_per_kelvin) && kb_hz_per_kelvin > 0.0))
        throw std::domain_error("PhysicalConstants.kb_hz_per_kelvin: must be finite and > 0");
    if (!(std::isfinite(zeeman_hz_per_oe) && zeeman_hz_per_oe > 0.0))
        throw std::domain_error("PhysicalConstants.zeeman_hz_per_oe: must be finite and > 0");
    if (!(std::isfinite(electron_g) && electron_g > 0.0))
        throw std::domain_error("PhysicalConstants.electron_g: must be finite and > 0");
}

double kelvin_to_hz(double temperature_k, const PhysicalConstants& pc) {
    pc.validate();
    if (!std::isfinite(temperature_k))
        throw std::domain_error("kelvin_to_hz: temperature must be finite");
    return temperature_k * pc.kb_hz_per_kelvin;
}

double field_to_nuclear_mhz(double field_koe, double gamma_n_mhz_per_koe) {
    if (!std::isfinite(field_koe))
        throw std::domain_error("field_to_nuclear_mhz: field must be finite");
    if (!(std::isfinite(gamma_n_mhz_per_koe) && gamma_n_mhz_per_koe > 0.0))
        throw std::domain_error("field_to_nuclear_mhz: gamma_n must be finite and > 0");
    return gamma_n_mhz_per_koe * field_koe;
}

} // namespace sngate
