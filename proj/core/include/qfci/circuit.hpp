#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qfci/hamiltonian.hpp"
#include "qfci/pauli.hpp"

namespace qfci {

enum class GateKind {
    H,        // Hadamard
    Y,        // R_x(-pi/2), the sigma_y change-of-basis gate
    YDag,
    Rz,       // diag(e^{-i angle/2}, e^{i angle/2})
    Phase,    // diag(1, e^{i angle})
    RotJ,     // diag(1, e^{2 pi i / 2^order}), the QFT R_j gate
    RotJDag,
    X,        // with controls: CNOT, Toffoli, ...
};

struct Gate {
    GateKind kind;
    int target = 0;
    double angle = 0.0;          // Rz / Phase
    int order = 0;               // RotJ
    std::vector<int> controls;

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate y(int q) { return {GateKind::Y, q}; }
    static Gate y_dag(int q) { return {GateKind::YDag, q}; }
    static Gate rz(int q, double theta) { return {GateKind::Rz, q, theta}; }
    static Gate phase(int q, double lambda) { return {GateKind::Phase, q, lambda}; }
    static Gate rot_j(int q, int j) { return {GateKind::RotJ, q, 0.0, j}; }
    static Gate rot_j_dag(int q, int j) { return {GateKind::RotJDag, q, 0.0, j}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate cnot(int control, int target);

    Eigen::Matrix2cd base_matrix() const;  // single-qubit matrix, controls aside
    bool touches(int qubit) const;
};

/// Ordered gate list over a fixed register. The scalar prefactor
/// e^{i global_phase} is tracked explicitly: it is unobservable until the
/// circuit is controlled, at which point it becomes a physical relative
/// phase on the control qubit.
struct Circuit {
    int register_size = 0;
    double global_phase = 0.0;
    std::vector<Gate> gates;

    explicit Circuit(int n = 0) : register_size(n) {}

    void append(Gate g);
    std::size_t size() const { return gates.size(); }

    // Every gate controlled on `control`; global_phase (plus extra_phase)
    // becomes a Phase gate on the control.
    Circuit controlled_on(int control, double extra_phase = 0.0) const;

    std::string to_text() const;  // one gate per line, for debug dumps
};

// Circuit implementing exp(i theta * coefficient * P) for a Pauli string P
// with real coefficient: change of basis (H for X, Y for Y), CNOT ladder
// onto the highest-index active qubit, Rz(-2 theta coefficient), mirrored
// ladder and inverse basis change. Identity-only strings are the caller's
// global phase and rejected here.
Circuit exp_pauli_string(const PauliString& s, double theta);

struct TrotterPlan {
    int n_slices = 1;
    // Term order is deterministic: diagonal strings first, then
    // lexicographic by factor pattern (PauliSum::merge order).
};

// First-order Trotter circuit for U = exp(i tau (E_max - H)): n_slices
// repetitions of per-term exponentials with angle -tau/N each, with the
// E_max and identity-term phases accumulated in global_phase.
Circuit compile_propagator(const PauliSum& hp, const EnergyWindow& window,
                           const TrotterPlan& plan);

// Textbook QFT over n qubits (qubit 0 = least significant): n Hadamards and
// n(n-1)/2 controlled R_j gates. The dense unitary equals the DFT matrix
// composed with the bit-reversal permutation.
Circuit qft_circuit(int n);
Circuit inverse_qft_circuit(int n);

// Elementary-gate count of one controlled application of the N=1 propagator
// circuit. Only the Rz of each string needs the control (basis changes and
// ladders cancel when the control is off); a controlled Rz counts as the
// standard two-CNOT + three-rotation decomposition. No statevector work;
// cost scales with the number of Hamiltonian terms.
std::uint64_t count_controlled_gates(const PauliSum& hp);
std::uint64_t count_controlled_gates(const MolecularHamiltonian& h);

}  // namespace qfci
