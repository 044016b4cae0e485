#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qfci/circuit.hpp"

namespace qfci {

/// Dense 2^n-amplitude register, qubit q stored in bit q of the amplitude
/// index. Capped at 17 qubits (16 system + 1 ancilla).
class Statevector {
public:
    explicit Statevector(int n_qubits);  // |0...0>
    static Statevector basis_state(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }

    Complex& operator[](std::uint64_t i) { return amps_[i]; }
    const Complex& operator[](std::uint64_t i) const { return amps_[i]; }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm() const;
    void normalize();
    void scale(Complex factor);

    Eigen::VectorXcd to_eigen() const;
    static Statevector from_eigen(const Eigen::VectorXcd& v);

    std::string to_text() const;  // "index re im" per nonzero amplitude

private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

inline constexpr int kMaxRegisterQubits = 17;

void apply_gate(Statevector& psi, const Gate& g);

// Applies the gate list and the global-phase prefactor.
void apply_circuit(Statevector& psi, const Circuit& c);

// Controlled application of a dense unitary on a target subregister.
// u must be 2^t x 2^t for t target qubits and unitary within 1e-10.
void apply_unitary_block(Statevector& psi, const Eigen::MatrixXcd& u,
                         std::span<const int> targets, std::span<const int> controls);

struct MeasurementResult {
    int bit;
    double p_zero;  // exact pre-measurement probabilities
    double p_one;
};

// Samples the exact marginal of qubit q, collapses and renormalizes in place.
MeasurementResult measure_qubit(Statevector& psi, int q, std::mt19937_64& rng);

// Exact marginal without collapse.
std::pair<double, double> qubit_probabilities(const Statevector& psi, int q);

// <phi|psi>
Complex overlap(const Statevector& psi, const Statevector& phi);

// Dense matrix of a circuit, built column by column through the gate kernels.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

}  // namespace qfci
