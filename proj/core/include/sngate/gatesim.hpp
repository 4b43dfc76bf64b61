#ifndef SNGATE_GATESIM_HPP
#define SNGATE_GATESIM_HPP

#include <Eigen/Dense>
#include <array>
#include <variant>
#include <vector>

namespace sngate {

// Two-qubit register over the basis |control target>, index = 2*c + t with
// 0 = up (m = +1/2) and 1 = down (m = -1/2).
//
// Conventions, fixed here and used by every operation below:
//   - rotations are exp(-i * angle * S_axis) with S = sigma/2; the -X and -Y
//     axes carry S_{-X} = -sigma_x/2 etc.
//   - ZZ free evolution imprints the phase
//         phi(c,t) = 2*pi*tau*(W m_c m_t + delta_c m_c + delta_t m_t)
//     on |c t>, i.e. the amplitude is multiplied by exp(+i phi). The
//     precession sense is chosen so that the three-pulse program of
//     cn_sequence flips the target exactly when the control is down (1).
struct RegisterState {
    Eigen::Vector4cd amplitudes;

    static RegisterState basis(int control_bit, int target_bit);

    double norm_error() const;  // | <psi|psi> - 1 |
    void validate() const;      // throws if not normalized to 1e-12
};

enum class Qubit { control = 0, target = 1 };

enum class Axis { plus_x, minus_x, plus_y, minus_y, plus_z, minus_z };

// Rotating-frame gate generator: SN coupling W plus per-qubit detunings,
// all plain frequencies in Hz.
struct GateHamiltonian {
    double coupling_hz;
    double control_detuning_hz = 0.0;
    double target_detuning_hz = 0.0;

    void validate() const;
};

struct Rotation {
    Qubit qubit;
    Axis axis;
    double angle_rad;
};

struct FreeEvolution {
    double duration_s;
};

using PulseEvent = std::variant<Rotation, FreeEvolution>;

struct PulseSequence {
    std::vector<PulseEvent> events;

    void validate() const;  // finite angles, positive durations
};

// Pulse realism knob for sequence_unitary. Ideal pulses are instantaneous
// rotations; finite pulses evolve under a constant transverse Rabi field
// with the ZZ + detuning terms still acting, for duration angle/(2*pi*Omega).
struct PulseSettings {
    bool ideal = true;
    double rabi_hz = 1.0e6;  // Omega, used only when ideal == false
};

// Single-qubit rotation on the named qubit; unitary and norm-preserving.
RegisterState apply_rotation(const RegisterState& state, Qubit qubit, Axis axis,
                             double angle_rad);

// Diagonal ZZ + detuning evolution for tau seconds (tau >= 0).
RegisterState free_evolve(const RegisterState& state, const GateHamiltonian& h, double tau_s);

// The controlled-NOT program: pi/2 about -X on the target, free evolution
// for 1/(2|W|) (the target turns by +/-90 degrees in the XY plane depending
// on the control), then pi/2 about -Y on the target. W = 0 has no gate and
// throws.
PulseSequence cn_sequence(double coupling_hz);

// 4x4 unitaries for single events and whole sequences. The sequence product
// is ordered left-to-right in time: U = U_n ... U_2 U_1.
Eigen::Matrix4cd rotation_unitary(Qubit qubit, Axis axis, double angle_rad);
Eigen::Matrix4cd free_unitary(const GateHamiltonian& h, double tau_s);
Eigen::Matrix4cd sequence_unitary(const PulseSequence& seq, const GateHamiltonian& h,
                                  const PulseSettings& pulses = {});

// CNOT in this basis: control = 1 flips the target.
Eigen::Matrix4cd ideal_cnot();

// Row per input basis state, column per output: table(in, out) = |U(out,in)|^2.
Eigen::Matrix4d truth_table(const Eigen::Matrix4cd& unitary);

// |Tr(U_ideal^dag U_sim)|^2 / 16. In optimized mode the same figure is
// maximized over pre/post single-qubit Z rotations (global phase drops out of
// the modulus) by multi-start coordinate ascent, each coordinate update being
// the exact one-dimensional maximizer. Ising-plus-pi/2-pulse constructions
// reach a CN gate only up to such local Z phases, so the optimized figure is
// the meaningful one. Throws if either input is not unitary.
double gate_fidelity(const Eigen::Matrix4cd& u_sim, const Eigen::Matrix4cd& u_ideal,
                     bool optimize_local_z);

// Schmidt coefficients of the control|target bipartition, descending.
// {1, 0} iff the state is a product state.
std::array<double, 2> schmidt_coefficients(const RegisterState& state);

} // namespace sngate

#endif
