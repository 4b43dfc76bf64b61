#include "sngate/coupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sngate {

double CouplingParams::hyperfine_product_hz() const {
    return gamma_n_mhz_per_koe * hyperfine_koe_per_mub * 1.0e6;
}

void CouplingParams::validate() const {
    if (!(std::isfinite(gamma_n_mhz_per_koe) && gamma_n_mhz_per_koe > 0.0))
        throw std::domain_error("CouplingParams.gamma_n_mhz_per_koe: must be finite and > 0");
    if (!(std::isfinite(hyperfine_koe_per_mub) && hyperfine_koe_per_mub > 0.0))
        throw std::domain_error("CouplingParams.hyperfine_koe_per_mub: must be finite and > 0");
    if (packet_sites < 2)
        throw std::domain_error("CouplingParams.packet_sites: must be >= 2");
    if (separation_sites < 0)
        throw std::domain_error("CouplingParams.separation_sites: must be >= 0");
}

MagnonPopulations MagnonPopulations::single_mode(int packet_sites, double k0_occupation) {
    if (packet_sites < 2)
        throw std::domain_error("MagnonPopulations.single_mode: packet_sites must be >= 2");
    MagnonPopulations pops;
    pops.occupation.assign(static_cast<std::size_t>(packet_sites) + 1, 0.0);
    pops.occupation[0] = k0_occupation;
    pops.validate();
    return pops;
}

void MagnonPopulations::validate() const {
    if (occupation.size() < 3)
        throw std::domain_error("MagnonPopulations.occupation: grid needs at least 3 points "
                                "(packet_sites >= 2)");
    for (std::size_t i = 0; i < occupation.size(); ++i) {
        if (!(std::isfinite(occupation[i]) && occupation[i] >= 0.0))
            throw std::domain_error("MagnonPopulations.occupation[" + std::to_string(i) +
                                    "]: must be finite and >= 0");
    }
}

double lattice_sum(int sites, int separation) {
    if (sites < 2)
        throw std::domain_error("lattice_sum: sites must be >= 2");
    const double n_sites = sites;
    double sum = 0.0;
    for (int n = 1; n <= sites; ++n) {
        const double k = std::numbers::pi * n / n_sites;
        sum += std::cos(k * separation) / (std::cos(k) - 1.0);
    }
    return sum;
}

double pair_sum_coupling_hz(std::span<const double> energies_hz,
                            std::span<const double> populations,
                            double hyperfine_product_hz, int separation_sites) {
    if (energies_hz.size() != populations.size())
        throw std::domain_error("pair_sum_coupling_hz: energy and population grids differ in size");
    if (energies_hz.size() < 3)
        throw std::domain_error("pair_sum_coupling_hz: grid needs at least 3 points");
    const int n_modes = static_cast<int>(energies_hz.size());
    const int sites = n_modes - 1;
    const double dk = std::numbers::pi / sites;

    double sum = 0.0;
    for (int i = 0; i < n_modes; ++i) {
        for (int j = 0; j < n_modes; ++j) {
            if (i == j) continue;
            const double dn = populations[i] - populations[j];
            const double de = energies_hz[j] - energies_hz[i];
            if (de == 0.0) {
                if (dn == 0.0) continue;  // equal-population degenerate pair: zero by convention
                throw std::domain_error("pair_sum_coupling_hz: degenerate mode pair (" +
                                        std::to_string(i) + ", " + std::to_string(j) +
                                        ") with unequal populations");
            }
            if (dn == 0.0) continue;
            sum += dn / de * std::cos((i - j) * dk * separation_sites);
        }
    }
    const double prefactor = hyperfine_product_hz / sites;
    return prefactor * prefactor * sum;
}

double range_function_general(const DispersionModel& model, const MagnonPopulations& pops,
                              const CouplingParams& params, const PhysicalConstants& pc) {
    model.validate();
    pops.validate();
    params.validate();
    if (pops.packet_sites() != params.packet_sites)
        throw std::domain_error("range_function_general: population grid has " +
                                std::to_string(pops.packet_sites()) + " sites, params say " +
                                std::to_string(params.packet_sites));

    const int sites = params.packet_sites;
    const double dk = std::numbers::pi / sites;
    const double band_hz = kelvin_to_hz(model.band_coefficient_k(), pc);

    std::vector<double> cos_k(static_cast<std::size_t>(sites) + 1);
    for (int n = 0; n <= sites; ++n) cos_k[n] = std::cos(n * dk);

    // eps_j - eps_i = band * (cos k_j - cos k_i); the factored form keeps the
    // small differences near the band edge at full precision.
    double sum = 0.0;
    for (int i = 0; i <= sites; ++i) {
        for (int j = 0; j <= sites; ++j) {
            if (i == j) continue;
            const double dn = pops.occupation[i] - pops.occupation[j];
            if (dn == 0.0) continue;
            const double de = band_hz * (cos_k[j] - cos_k[i]);
            sum += dn / de * std::cos((i - j) * dk * params.separation_sites);
        }
    }
    const double prefactor = params.hyperfine_product_hz() / sites;
    return prefactor * prefactor * sum;
}

double range_function_k0(const DispersionModel& model, double k0_occupation,
                         const CouplingParams& params, const PhysicalConstants& pc) {
    model.validate();
    params.validate();
    if (!(std::isfinite(k0_occupation) && k0_occupation >= 0.0))
        throw std::domain_error("range_function_k0: k0_occupation must be finite and >= 0");
    const double band_hz = kelvin_to_hz(model.band_coefficient_k(), pc);
    if (band_hz == 0.0)
        throw std::domain_error("range_function_k0: zero band coefficient, coupling singular");
    const double ga_hz = params.hyperfine_product_hz();
    const double n0_per_site = k0_occupation / params.packet_sites;
    return 2.0 * ga_hz * ga_hz * n0_per_site / (band_hz * params.packet_sites) *
           lattice_sum(params.packet_sites, params.separation_sites);
}

std::vector<CouplingDistanceRow> coupling_vs_distance(const DispersionModel& model,
                                                      double k0_occupation,
                                                      const CouplingParams& params,
                                                      int max_separation,
                                                      const PhysicalConstants& pc) {
    if (max_separation < 0)
        throw std::domain_error("coupling_vs_distance: max_separation must be >= 0");
    std::vector<CouplingDistanceRow> rows;
    rows.reserve(static_cast<std::size_t>(max_separation) + 1);
    CouplingParams at_r = params;
    for (int r = 0; r <= max_separation; ++r) {
        at_r.separation_sites = r;
        rows.push_back({r, range_function_k0(model, k0_occupation, at_r, pc)});
    }
    return rows;
}

} // namespace sngate
