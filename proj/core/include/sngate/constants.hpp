#ifndef SNGATE_CONSTANTS_HPP
#define SNGATE_CONSTANTS_HPP

namespace sngate {

// Unit conventions used throughout the library:
//   - energies are ordinary frequencies (Hz), never angular frequencies;
//     gyromagnetic ratios are the gamma/(2*pi) values quoted in MHz/kOe
//   - exchange couplings and gaps enter in kelvin and are converted via k_B/h
//   - magnetic fields are in kOe at the interface, Oe where Zeeman slopes apply
struct PhysicalConstants {
    // k_B/h, frequency equivalent of one kelvin.
    double kb_hz_per_kelvin = 2.0836619e10;
    // Electron Zeeman frequency per oersted, per unit g-factor slot.
    double zeeman_hz_per_oe = 2.7992e6;
    // Default electron g-factor used when a model does not supply one.
    double electron_g = 2.0;

    void validate() const;
};

// Thermal energy as a frequency: T [K] -> T * k_B/h [Hz]. Linear and
// sign-preserving; throws std::domain_error on non-finite input.
double kelvin_to_hz(double temperature_k, const PhysicalConstants& pc = {});

// Nuclear Larmor frequency gamma_n * H. gamma_n in MHz/kOe, H in kOe,
// result in MHz. Throws std::domain_error on non-finite input or
// non-positive gamma_n.
double field_to_nuclear_mhz(double field_koe, double gamma_n_mhz_per_koe);

} // namespace sngate

#endif
