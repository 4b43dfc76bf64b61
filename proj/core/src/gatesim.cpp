#include "sngate/gatesim.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sngate {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector4cd;
using namespace std::complex_literals;

constexpr double two_pi = 2.0 * std::numbers::pi;

// m quantum number of a basis bit: 0 = up = +1/2, 1 = down = -1/2.
double m_of(int bit) { return bit == 0 ? 0.5 : -0.5; }

Matrix2cd pauli(Axis axis, double& sign) {
    Matrix2cd s;
    switch (axis) {
        case Axis::plus_x: sign = 1.0; s << 0, 1, 1, 0; break;
        case Axis::minus_x: sign = -1.0; s << 0, 1, 1, 0; break;
        case Axis::plus_y: sign = 1.0; s << 0, -1i, 1i, 0; break;
        case Axis::minus_y: sign = -1.0; s << 0, -1i, 1i, 0; break;
        case Axis::plus_z: sign = 1.0; s << 1, 0, 0, -1; break;
        case Axis::minus_z: sign = -1.0; s << 1, 0, 0, -1; break;
        default: throw std::domain_error("gatesim: invalid rotation axis");
    }
    return s;
}

// exp(-i angle S_axis) with S_axis = sign * sigma / 2.
Matrix2cd rotation_2x2(Axis axis, double angle_rad) {
    if (!std::isfinite(angle_rad))
        throw std::domain_error("gatesim: rotation angle must be finite");
    double sign = 0.0;
    const Matrix2cd sigma = pauli(axis, sign);
    const double half = 0.5 * angle_rad;
    return std::cos(half) * Matrix2cd::Identity() - 1i * (sign * std::sin(half)) * sigma;
}

Matrix4cd on_qubit(Qubit qubit, const Matrix2cd& u) {
    Matrix4cd out = Matrix4cd::Zero();
    // basis |c t> with index 2c + t
    if (qubit == Qubit::control) {
        for (int c1 = 0; c1 < 2; ++c1)
            for (int c2 = 0; c2 < 2; ++c2)
                for (int t = 0; t < 2; ++t) out(2 * c1 + t, 2 * c2 + t) = u(c1, c2);
    } else {
        for (int c = 0; c < 2; ++c)
            for (int t1 = 0; t1 < 2; ++t1)
                for (int t2 = 0; t2 < 2; ++t2) out(2 * c + t1, 2 * c + t2) = u(t1, t2);
    }
    return out;
}

// Diagonal rotating-frame energies in Hz: E(c,t) = W m_c m_t + d_c m_c + d_t m_t.
double basis_energy_hz(const GateHamiltonian& h, int c, int t) {
    return h.coupling_hz * m_of(c) * m_of(t) + h.control_detuning_hz * m_of(c) +
           h.target_detuning_hz * m_of(t);
}

void check_unitary(const Matrix4cd& u, const char* who) {
    const double defect = (u.adjoint() * u - Matrix4cd::Identity()).cwiseAbs().maxCoeff();
    if (!(defect <= 1.0e-10))
        throw std::domain_error(std::string(who) + ": input matrix is not unitary");
}

// exp(-i 2*pi*t G) of a Hermitian generator, by eigendecomposition.
Matrix4cd hermitian_propagator(const Matrix4cd& generator_hz, double duration_s) {
    Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(generator_hz);
    Vector4cd phases;
    for (int i = 0; i < 4; ++i)
        phases(i) = std::exp(-1i * (two_pi * duration_s * solver.eigenvalues()(i)));
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

// Finite-duration pulse: constant Rabi drive about the rotation axis with the
// ZZ + detuning terms still acting. The generator is
//     G = Omega * S_axis(qubit) - diag(E(c,t)),
// whose Omega->inf limit is the ideal rotation and whose Omega->0 limit is
// free evolution (matching the sign convention of free_evolve).
Matrix4cd finite_pulse_unitary(const Rotation& rot, const GateHamiltonian& h, double rabi_hz) {
    if (!(std::isfinite(rabi_hz) && rabi_hz > 0.0))
        throw std::domain_error("gatesim: finite-pulse Rabi frequency must be finite and > 0");
    double angle = rot.angle_rad;
    Axis axis = rot.axis;
    if (angle < 0.0) {  // negative angle = positive angle about the opposite axis
        angle = -angle;
        switch (axis) {
            case Axis::plus_x: axis = Axis::minus_x; break;
            case Axis::minus_x: axis = Axis::plus_x; break;
            case Axis::plus_y: axis = Axis::minus_y; break;
            case Axis::minus_y: axis = Axis::plus_y; break;
            case Axis::plus_z: axis = Axis::minus_z; break;
            case Axis::minus_z: axis = Axis::plus_z; break;
        }
    }
    double sign = 0.0;
    const Matrix2cd sigma = pauli(axis, sign);
    const Matrix4cd spin = on_qubit(rot.qubit, Matrix2cd(0.5 * sign * sigma));
    Matrix4cd generator = rabi_hz * spin;
    for (int c = 0; c < 2; ++c)
        for (int t = 0; t < 2; ++t)
            generator(2 * c + t, 2 * c + t) -= basis_energy_hz(h, c, t);
    const double duration_s = angle / (two_pi * rabi_hz);
    return hermitian_propagator(generator, duration_s);
}

} // namespace

RegisterState RegisterState::basis(int control_bit, int target_bit) {
    if ((control_bit != 0 && control_bit != 1) || (target_bit != 0 && target_bit != 1))
        throw std::domain_error("RegisterState.basis: bits must be 0 or 1");
    RegisterState state;
    state.amplitudes = Vector4cd::Zero();
    state.amplitudes(2 * control_bit + target_bit) = 1.0;
    return state;
}

double RegisterState::norm_error() const { return std::abs(amplitudes.squaredNorm() - 1.0); }

void RegisterState::validate() const {
    if (!amplitudes.allFinite())
        throw std::domain_error("RegisterState: non-finite amplitude");
    if (norm_error() > 1.0e-12)
        throw std::domain_error("RegisterState: state is not normalized");
}

void GateHamiltonian::validate() const {
    if (!std::isfinite(coupling_hz) || !std::isfinite(control_detuning_hz) ||
        !std::isfinite(target_detuning_hz))
        throw std::domain_error("GateHamiltonian: all frequencies must be finite");
}

void PulseSequence::validate() const {
    for (const auto& event : events) {
        if (const auto* rot = std::get_if<Rotation>(&event)) {
            if (!std::isfinite(rot->angle_rad))
                throw std::domain_error("PulseSequence: rotation angle must be finite");
        } else {
            const auto& free = std::get<FreeEvolution>(event);
            if (!(std::isfinite(free.duration_s) && free.duration_s > 0.0))
                throw std::domain_error("PulseSequence: free-evolution duration must be > 0");
        }
    }
}

RegisterState apply_rotation(const RegisterState& state, Qubit qubit, Axis axis,
                             double angle_rad) {
    state.validate();
    const Matrix2cd u = rotation_2x2(axis, angle_rad);
    RegisterState out = state;
    // Act on the named qubit's 2x2 block for each value of the spectator bit.
    const int stride = (qubit == Qubit::control) ? 2 : 1;
    const int spectator_stride = (qubit == Qubit::control) ? 1 : 2;
    for (int spectator = 0; spectator < 2; ++spectator) {
        const int i0 = spectator * spectator_stride;
        const int i1 = i0 + stride;
        const auto a0 = state.amplitudes(i0);
        const auto a1 = state.amplitudes(i1);
        out.amplitudes(i0) = u(0, 0) * a0 + u(0, 1) * a1;
        out.amplitudes(i1) = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

RegisterState free_evolve(const RegisterState& state, const GateHamiltonian& h, double tau_s) {
    state.validate();
    h.validate();
    if (!(std::isfinite(tau_s) && tau_s >= 0.0))
        throw std::domain_error("free_evolve: tau must be finite and >= 0");
    RegisterState out = state;
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            const double phase = two_pi * tau_s * basis_energy_hz(h, c, t);
            out.amplitudes(2 * c + t) *= std::exp(1i * phase);
        }
    }
    return out;
}

PulseSequence cn_sequence(double coupling_hz) {
    if (!std::isfinite(coupling_hz) || coupling_hz == 0.0)
        throw std::domain_error("cn_sequence: zero coupling gives no gate");
    const double tau_s = 1.0 / (2.0 * std::abs(coupling_hz));
    PulseSequence seq;
    seq.events = {
        Rotation{Qubit::target, Axis::minus_x, std::numbers::pi / 2.0},
        FreeEvolution{tau_s},
        Rotation{Qubit::target, Axis::minus_y, std::numbers::pi / 2.0},
    };
    return seq;
}

Eigen::Matrix4cd rotation_unitary(Qubit qubit, Axis axis, double angle_rad) {
    return on_qubit(qubit, rotation_2x2(axis, angle_rad));
}

Eigen::Matrix4cd free_unitary(const GateHamiltonian& h, double tau_s) {
    h.validate();
    if (!(std::isfinite(tau_s) && tau_s >= 0.0))
        throw std::domain_error("free_unitary: tau must be finite and >= 0");
    Matrix4cd u = Matrix4cd::Zero();
    for (int c = 0; c < 2; ++c)
        for (int t = 0; t < 2; ++t)
            u(2 * c + t, 2 * c + t) = std::exp(1i * (two_pi * tau_s * basis_energy_hz(h, c, t)));
    return u;
}

Eigen::Matrix4cd sequence_unitary(const PulseSequence& seq, const GateHamiltonian& h,
                                  const PulseSettings& pulses) {
    seq.validate();
    h.validate();
    Matrix4cd u = Matrix4cd::Identity();
    for (const auto& event : seq.events) {
        Matrix4cd step;
        if (const auto* rot = std::get_if<Rotation>(&event)) {
            step = pulses.ideal ? rotation_unitary(rot->qubit, rot->axis, rot->angle_rad)
                                : finite_pulse_unitary(*rot, h, pulses.rabi_hz);
        } else {
            step = free_unitary(h, std::get<FreeEvolution>(event).duration_s);
        }
        u = step * u;  // later events act after earlier ones
    }
    return u;
}

Eigen::Matrix4cd ideal_cnot() {
    Matrix4cd u = Matrix4cd::Zero();
    u(0, 0) = 1.0;  // |00> -> |00>
    u(1, 1) = 1.0;  // |01> -> |01>
    u(3, 2) = 1.0;  // |10> -> |11>
    u(2, 3) = 1.0;  // |11> -> |10>
    return u;
}

Eigen::Matrix4d truth_table(const Eigen::Matrix4cd& unitary) {
    check_unitary(unitary, "truth_table");
    Eigen::Matrix4d table;
    for (int in = 0; in < 4; ++in)
        for (int out = 0; out < 4; ++out) table(in, out) = std::norm(unitary(out, in));
    return table;
}

double gate_fidelity(const Eigen::Matrix4cd& u_sim, const Eigen::Matrix4cd& u_ideal,
                     bool optimize_local_z) {
    check_unitary(u_sim, "gate_fidelity");
    check_unitary(u_ideal, "gate_fidelity");
    if (!optimize_local_z) {
        const std::complex<double> tr = (u_ideal.adjoint() * u_sim).trace();
        return std::norm(tr) / 16.0;
    }

    // Maximize |sum_{k,j} G_kj exp(i(A c_k + B t_k + C c_j + D t_j))|^2 / 16
    // over the post (A, B) and pre (C, D) Z-rotation angles. G_kj collects
    // the entrywise overlap with the ideal gate; the global phase drops out
    // of the modulus. Each coordinate update below is the exact maximizer
    // with the other three angles held fixed, so every sweep is monotone.
    Matrix4cd overlap;
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) overlap(k, j) = u_sim(k, j) * std::conj(u_ideal(k, j));

    const auto bit = [](int index, int which) { return which == 0 ? index / 2 : index % 2; };
    const auto trace_at = [&](const std::array<double, 4>& ang) {
        std::complex<double> tr = 0.0;
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) {
                const double phase = ang[0] * bit(k, 0) + ang[1] * bit(k, 1) +
                                     ang[2] * bit(j, 0) + ang[3] * bit(j, 1);
                tr += overlap(k, j) * std::exp(1i * phase);
            }
        return tr;
    };

    constexpr double quarter = std::numbers::pi / 2.0;
    double best = 0.0;
    for (int s0 = 0; s0 < 4; ++s0)
        for (int s1 = 0; s1 < 4; ++s1)
            for (int s2 = 0; s2 < 4; ++s2)
                for (int s3 = 0; s3 < 4; ++s3) {
                    std::array<double, 4> ang = {s0 * quarter, s1 * quarter, s2 * quarter,
                                                 s3 * quarter};
                    double value = std::abs(trace_at(ang));
                    for (int sweep = 0; sweep < 64; ++sweep) {
                        const double before = value;
                        for (int coord = 0; coord < 4; ++coord) {
                            // T = P e^{i ang} + Q in the chosen coordinate.
                            std::complex<double> p = 0.0, q = 0.0;
                            for (int k = 0; k < 4; ++k)
                                for (int j = 0; j < 4; ++j) {
                                    const int own = coord < 2 ? bit(k, coord) : bit(j, coord - 2);
                                    double rest = 0.0;
                                    for (int c2 = 0; c2 < 4; ++c2) {
                                        if (c2 == coord) continue;
                                        const int b = c2 < 2 ? bit(k, c2) : bit(j, c2 - 2);
                                        rest += ang[c2] * b;
                                    }
                                    const auto term = overlap(k, j) * std::exp(1i * rest);
                                    (own ? p : q) += term;
                                }
                            if (std::abs(p) > 0.0)
                                ang[coord] = std::arg(q) - std::arg(p);
                            value = std::abs(p) + std::abs(q);
                        }
                        if (value - before < 1.0e-15) break;
                    }
                    best = std::max(best, value);
                }
    return best * best / 16.0;
}

std::array<double, 2> schmidt_coefficients(const RegisterState& state) {
    state.validate();
    Matrix2cd m;
    m << state.amplitudes(0), state.amplitudes(1), state.amplitudes(2), state.amplitudes(3);
    Eigen::JacobiSVD<Matrix2cd> svd(m);
    return {svd.singularValues()(0), svd.singularValues()(1)};
}

} // namespace sngate
