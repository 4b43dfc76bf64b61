#ifndef SNGATE_COUPLING_HPP
#define SNGATE_COUPLING_HPP

#include <span>
#include <vector>

#include "sngate/constants.hpp"
#include "sngate/dispersion.hpp"

namespace sngate {

// Inputs of the Suhl-Nakamura range function: the hyperfine link between the
// nuclear qubits and the magnon bath, plus the packet geometry.
struct CouplingParams {
    double gamma_n_mhz_per_koe;    // nuclear gyromagnetic ratio gamma_n/(2*pi)
    double hyperfine_koe_per_mub;  // longitudinal hyperfine constant A
    int packet_sites;              // N, sites inside the packet (includes I=0 sites), >= 2
    int separation_sites;          // r_ij, qubit separation in lattice units, >= 0

    // gamma_n * A as a plain frequency: MHz/kOe * kOe -> MHz -> Hz.
    double hyperfine_product_hz() const;

    void validate() const;
};

// Mode occupations n_k on the grid k_n = n*pi/N, index n = 0..N.
struct MagnonPopulations {
    std::vector<double> occupation;

    // All weight in the k = 0 mode; the microwave-pumped configuration.
    static MagnonPopulations single_mode(int packet_sites, double k0_occupation);

    int packet_sites() const { return static_cast<int>(occupation.size()) - 1; }

    void validate() const;
};

// Dimensionless lattice sum of the pumped closed form,
//     S(N, r) = sum_{n=1..N} cos(k_n r) / (cos(k_n) - 1),  k_n = n*pi/N.
// The denominator is bounded away from zero for n >= 1. Negative r is
// accepted (the sum is even in r).
double lattice_sum(int sites, int separation);

// Two-population range function over arbitrary mode energies,
//     W = (gA/N)^2 sum_{k != k'} (n_k - n_k')/(eps_k' - eps_k) cos((k-k') r),
// summed over ordered pairs on the k_n grid. Degenerate pairs
// (eps_k == eps_k') contribute zero when the populations match and are a
// domain error otherwise. energies_hz and populations must share the grid.
double pair_sum_coupling_hz(std::span<const double> energies_hz,
                            std::span<const double> populations,
                            double hyperfine_product_hz, int separation_sites);

// Same pair sum with energies drawn from the dispersion model. Energy
// differences are evaluated in the factored form band * (cos k' - cos k),
// which avoids the cancellation of differencing two rounded band energies.
double range_function_general(const DispersionModel& model, const MagnonPopulations& pops,
                              const CouplingParams& params, const PhysicalConstants& pc = {});

// Closed form for the k = 0 pumped population,
//     W = 2 (gA)^2 (n0/N) / (J(j1 - j1^3/4) N) * S(N, r_ij),
// equal to range_function_general with the single-mode population. Returns
// the signed value; the magnitude is what enters gate timing.
double range_function_k0(const DispersionModel& model, double k0_occupation,
                         const CouplingParams& params, const PhysicalConstants& pc = {});

struct CouplingDistanceRow {
    int separation_sites;
    double coupling_hz;
};

// W(r) for r = 0..max_separation with everything else fixed. Rows are in
// ascending r.
std::vector<CouplingDistanceRow> coupling_vs_distance(const DispersionModel& model,
                                                      double k0_occupation,
                                                      const CouplingParams& params,
                                                      int max_separation,
                                                      const PhysicalConstants& pc = {});

} // namespace sngate

#endif
