#ifndef SNGATE_DISPERSION_HPP
#define SNGATE_DISPERSION_HPP

#include "sngate/constants.hpp"

namespace sngate {

// One-triplet magnon band of a gapped spin ladder, truncated to the leading
// cosine harmonic:
//     eps(k_n) = C + J*(j1 - j1^3/4) * cos(k_n),   k_n = n*pi/N, n = 0..N.
// The band maximum sits at k = 0, the minimum at k = pi.
struct DispersionModel {
    double offset_k;        // C, k-independent part (kelvin)
    double exchange_k;      // J, inter-chain (rung) exchange (kelvin), > 0
    double exchange_ratio;  // j1 = J1/J, dimensionless, 0 < j1 < 2

    // J*(j1 - j1^3/4), the cosine-band prefactor in kelvin. Positive for a
    // valid model.
    double band_coefficient_k() const;

    void validate() const;  // throws std::domain_error naming the bad field
};

// eps(k_n) in Hz for band index n on an (N+1)-point grid over [0, pi].
double magnon_energy_hz(const DispersionModel& model, int band_index, int packet_sites,
                        const PhysicalConstants& pc = {});

struct BandExtrema {
    double min_hz;
    double max_hz;
    double bandwidth_hz;  // max - min = 2*J*(j1 - j1^3/4) in Hz
};

BandExtrema band_extrema(const DispersionModel& model, const PhysicalConstants& pc = {});

// Zeeman-split triplet levels above the singlet ground state. The m = -1
// branch descends with field, m = 0 is flat, m = +1 ascends:
//     E_m(H) = gap + m * g * zeeman_hz_per_oe * H.
struct ZeemanModel {
    double gap_k;  // singlet-triplet gap at H = 0 (kelvin), > 0
    double g;      // electron g-factor, > 0

    void validate() const;
};

// Energy of the |1 m> branch above the singlet at field H (kOe), in Hz.
// m must be -1, 0 or +1.
double triplet_level_hz(const ZeemanModel& zeeman, int m, double field_koe,
                        const PhysicalConstants& pc = {});

// Inverts triplet_level_hz on the m = +1 or m = -1 branch: the field (kOe)
// at which the branch crosses the given frequency. m = 0 has no unique
// solution; a negative resulting field is out of range. Both throw.
double resonance_field_koe(const ZeemanModel& zeeman, int m, double frequency_hz,
                           const PhysicalConstants& pc = {});

} // namespace sngate

#endif
