#include "sngate/addressing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sngate {

void ChainLayout::validate() const {
    if (!std::isfinite(lattice_spacing) || lattice_spacing <= 0.0)
        throw std::domain_error("ChainLayout.lattice_spacing: must be finite and > 0");
    if (!std::isfinite(base_field_koe))
        throw std::domain_error("ChainLayout.base_field_koe: must be finite");
    if (!std::isfinite(gradient_koe_per_length))
        throw std::domain_error("ChainLayout.gradient_koe_per_length: must be finite");
    if (extent_min > extent_max)
        throw std::domain_error("ChainLayout.extent: min index exceeds max index");
    for (std::size_t i = 0; i < qubit_positions.size(); ++i) {
        if (qubit_positions[i] < extent_min || qubit_positions[i] > extent_max)
            throw std::domain_error("ChainLayout.qubit_positions[" + std::to_string(i) +
                                    "]: outside the chain extent");
        if (i > 0 && qubit_positions[i] <= qubit_positions[i - 1])
            throw std::domain_error("ChainLayout.qubit_positions: must be strictly increasing");
    }
}

void LocalFields::validate() const {
    if (!std::isfinite(packet_shift_koe))
        throw std::domain_error("LocalFields.packet_shift_koe: must be finite");
    if (!(std::isfinite(conditional_shift_koe) && conditional_shift_koe >= 0.0))
        throw std::domain_error("LocalFields.conditional_shift_koe: must be finite and >= 0 "
                                "(sign is carried by the +/- line positions)");
}

double local_field_koe(const ChainLayout& layout, double position) {
    layout.validate();
    if (!std::isfinite(position) || position < layout.extent_min || position > layout.extent_max)
        throw std::domain_error("local_field_koe: position outside the chain extent");
    return layout.base_field_koe + layout.gradient_koe_per_length * position * layout.lattice_spacing;
}

namespace {

int qubit_site(const ChainLayout& layout, int target_index, const char* who) {
    if (target_index < 0 || target_index >= static_cast<int>(layout.qubit_positions.size()))
        throw std::domain_error(std::string(who) + ": qubit index out of range");
    return layout.qubit_positions[static_cast<std::size_t>(target_index)];
}

} // namespace

TargetFrequencies target_frequencies(const ChainLayout& layout, int target_index,
                                     const LocalFields& fields, double gamma_n_mhz_per_koe) {
    fields.validate();
    if (!(std::isfinite(gamma_n_mhz_per_koe) && gamma_n_mhz_per_koe > 0.0))
        throw std::domain_error("target_frequencies: gamma_n must be finite and > 0");
    const int site = qubit_site(layout, target_index, "target_frequencies");
    const double field = local_field_koe(layout, site);
    // Assembled as base +/- split: (omega_plus - omega_minus) then differs
    // from 2*gamma_n*h_SN by at most the one rounding in omega_minus.
    const double split = gamma_n_mhz_per_koe * fields.conditional_shift_koe;
    const double base = gamma_n_mhz_per_koe * (field + fields.packet_shift_koe);
    const double plus = base + split;
    const double minus = plus - 2.0 * split;
    return TargetFrequencies{.omega_plus_mhz = plus, .omega_minus_mhz = minus};
}

std::vector<SpectralLine> target_spectrum(const ChainLayout& layout, int target_index,
                                          const LocalFields& fields,
                                          double gamma_n_mhz_per_koe, bool control_saturated) {
    if (control_saturated) {
        fields.validate();
        if (!(std::isfinite(gamma_n_mhz_per_koe) && gamma_n_mhz_per_koe > 0.0))
            throw std::domain_error("target_spectrum: gamma_n must be finite and > 0");
        const int site = qubit_site(layout, target_index, "target_spectrum");
        const double base = gamma_n_mhz_per_koe * local_field_koe(layout, site);
        // Saturating the control averages h_SN to zero; the single line sits
        // a shift of exactly gamma_n*h_tr above the packet-off line.
        return {SpectralLine{base + gamma_n_mhz_per_koe * fields.packet_shift_koe, 1.0}};
    }
    const auto [plus, minus] = target_frequencies(layout, target_index, fields, gamma_n_mhz_per_koe);
    return {SpectralLine{plus, 0.5}, SpectralLine{minus, 0.5}};
}

double excitation_position(const ChainLayout& layout, const ZeemanModel& zeeman,
                           double microwave_hz, const PhysicalConstants& pc) {
    layout.validate();
    zeeman.validate();
    pc.validate();
    if (layout.gradient_koe_per_length == 0.0)
        throw std::domain_error("excitation_position: zero gradient gives no spatial resolution");
    if (!(std::isfinite(microwave_hz) && microwave_hz > 0.0))
        throw std::domain_error("excitation_position: frequency must be finite and > 0");
    // Invert nu = gap - g*zeeman*(H0 + G*a*x)*1000 on the descending branch.
    const double slope_hz_per_koe = zeeman.g * pc.zeeman_hz_per_oe * 1000.0;
    const double field_koe = (kelvin_to_hz(zeeman.gap_k, pc) - microwave_hz) / slope_hz_per_koe;
    const double position = (field_koe - layout.base_field_koe) /
                            (layout.gradient_koe_per_length * layout.lattice_spacing);
    if (!std::isfinite(position) || position < layout.extent_min || position > layout.extent_max)
        throw std::domain_error("excitation_position: frequency resonates outside the chain");
    return position;
}

std::vector<ResolvabilityMargin> resolvability_margins(const ChainLayout& layout,
                                                       double gamma_n_mhz_per_koe,
                                                       double linewidth_mhz) {
    layout.validate();
    if (layout.qubit_positions.size() < 2)
        throw std::domain_error("resolvability_margins: need at least two qubits");
    if (!(std::isfinite(gamma_n_mhz_per_koe) && gamma_n_mhz_per_koe > 0.0))
        throw std::domain_error("resolvability_margins: gamma_n must be finite and > 0");
    if (!(std::isfinite(linewidth_mhz) && linewidth_mhz > 0.0))
        throw std::domain_error("resolvability_margins: linewidth must be finite and > 0");
    const double step_mhz_per_site = gamma_n_mhz_per_koe *
                                     std::abs(layout.gradient_koe_per_length) *
                                     layout.lattice_spacing;
    std::vector<ResolvabilityMargin> margins;
    margins.reserve(layout.qubit_positions.size() - 1);
    for (std::size_t i = 0; i + 1 < layout.qubit_positions.size(); ++i) {
        const int spacing = layout.qubit_positions[i + 1] - layout.qubit_positions[i];
        margins.push_back({static_cast<int>(i), static_cast<int>(i + 1),
                           step_mhz_per_site * spacing / linewidth_mhz});
    }
    return margins;
}

double confinement_margin(const ChainLayout& layout, const ZeemanModel& zeeman,
                          int packet_sites, double lifetime_s, const PhysicalConstants& pc) {
    layout.validate();
    zeeman.validate();
    pc.validate();
    if (packet_sites < 1)
        throw std::domain_error("confinement_margin: packet_sites must be >= 1");
    if (!(std::isfinite(lifetime_s) && lifetime_s > 0.0))
        throw std::domain_error("confinement_margin: lifetime must be finite and > 0");
    // Zeeman mismatch across one packet length, in Hz, against the 1/T_s
    // lifetime linewidth.
    const double mismatch_hz = zeeman.g * pc.zeeman_hz_per_oe *
                               std::abs(layout.gradient_koe_per_length) * layout.lattice_spacing *
                               1000.0 * packet_sites;
    return mismatch_hz * lifetime_s;
}

double estimate_packet_shift_koe(const CouplingParams& params, double k0_occupation) {
    params.validate();
    if (!(std::isfinite(k0_occupation) && k0_occupation >= 0.0))
        throw std::domain_error("estimate_packet_shift_koe: occupation must be finite and >= 0");
    return params.hyperfine_koe_per_mub * k0_occupation / params.packet_sites;
}

} // namespace sngate
