#ifndef SNGATE_ADDRESSING_HPP
#define SNGATE_ADDRESSING_HPP

#include <utility>
#include <vector>

#include "sngate/constants.hpp"
#include "sngate/coupling.hpp"
#include "sngate/dispersion.hpp"

namespace sngate {

// A spin chain in a linear field gradient. Positions are lattice indices;
// the field at index x is H0 + G * x * a.
struct ChainLayout {
    double lattice_spacing;          // a, arbitrary length unit
    double base_field_koe;           // H0 at x = 0
    double gradient_koe_per_length;  // G; may be zero for uniform-field checks
    std::vector<int> qubit_positions;  // strictly increasing, inside the extent
    int extent_min;
    int extent_max;

    void validate() const;
};

// Static field shifts at the target site while the packet is lit:
// packet_shift is independent of the control qubit, conditional_shift flips
// sign with it. conditional_shift >= 0 by convention; the sign is carried by
// the +/- in the line positions.
struct LocalFields {
    double packet_shift_koe;       // h_tr
    double conditional_shift_koe;  // h_SN

    void validate() const;
};

// Field at a (possibly fractional) lattice position inside the extent, kOe.
double local_field_koe(const ChainLayout& layout, double position);

struct TargetFrequencies {
    double omega_plus_mhz;
    double omega_minus_mhz;
};

// NMR doublet of the target qubit while the packet is on:
//     omega_± = gamma_n * (H(x_target) + h_tr ± h_SN).
// Assembled as base ± split so the doublet splitting reproduces
// 2 * gamma_n * h_SN to within one rounding of the line frequency.
// target_index addresses layout.qubit_positions.
TargetFrequencies target_frequencies(const ChainLayout& layout, int target_index,
                                     const LocalFields& fields, double gamma_n_mhz_per_koe);

struct SpectralLine {
    double frequency_mhz;
    double weight;
};

// Predicted target spectrum. Unsaturated control: doublet at omega_± with
// weights 1/2 each. Saturated control (continuous rf on the control): h_SN
// averages to zero and a single line of weight 1 sits at
// gamma_n * (H + h_tr); its shift from the packet-off line is gamma_n * h_tr,
// which is how h_tr is measured.
std::vector<SpectralLine> target_spectrum(const ChainLayout& layout, int target_index,
                                          const LocalFields& fields,
                                          double gamma_n_mhz_per_koe, bool control_saturated);

// Where along the chain a microwave of the given frequency excites the
// descending |1 -1> branch: inverts x -> triplet_level(-1, H(x)). Requires a
// nonzero gradient and a frequency inside the range swept over the extent.
double excitation_position(const ChainLayout& layout, const ZeemanModel& zeeman,
                           double microwave_hz, const PhysicalConstants& pc = {});

struct ResolvabilityMargin {
    int lower_qubit;  // index into qubit_positions
    int upper_qubit;
    double margin;    // > 1 means the adjacent pair is resolvable
};

// Frequency-domain distinguishability of adjacent qubit pairs:
//     margin = gamma_n * |G| * a * spacing / linewidth.
std::vector<ResolvabilityMargin> resolvability_margins(const ChainLayout& layout,
                                                       double gamma_n_mhz_per_koe,
                                                       double linewidth_mhz);

// Gradient-confinement figure of merit for a packet of the given length:
// the Zeeman-energy mismatch across the packet divided by the lifetime
// linewidth 1/T_s. Much greater than 1 indicates the packet cannot hop to a
// neighbouring region.
double confinement_margin(const ChainLayout& layout, const ZeemanModel& zeeman,
                          int packet_sites, double lifetime_s,
                          const PhysicalConstants& pc = {});

// Rough order-of-magnitude guess for the packet shift, A * n0/N (mean packet
// moment times the hyperfine field per moment). A heuristic only; the
// saturation measurement behind target_spectrum is the reliable route.
double estimate_packet_shift_koe(const CouplingParams& params, double k0_occupation);

} // namespace sngate

#endif
