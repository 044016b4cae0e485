#pragma once

#include <Eigen/Dense>

#include "qfci/hamiltonian.hpp"

namespace qfci {

/// Dense occupation-number-basis matrix of a Hamiltonian, 2^n x 2^n.
/// Basis index k encodes the occupation of spin orbital q in bit q.
struct FockBasisMatrix {
    int n_qubits = 0;
    Eigen::MatrixXcd matrix;

    Eigen::Index dimension() const { return matrix.rows(); }
    double hermiticity_defect() const;
};

// Builds the matrix by applying creation/annihilation operators directly on
// occupation bitstrings with fermionic parity signs; independent of the
// Jordan-Wigner code path and used as its oracle. Capped at 16 spin orbitals.
FockBasisMatrix build_fock_matrix(const MolecularHamiltonian& h);

// Wraps an explicitly given matrix (toy models, interpolated Hamiltonians).
FockBasisMatrix fock_matrix_from_dense(Eigen::MatrixXcd m);

// Pseudo-quantum number M_K = (N_A - N_B)/2 of a basis determinant, with
// Kramers A on even and B on odd qubits. Relativistic Hamiltonians couple
// different M_K blocks; spin-conserving real ones do not.
double basis_m_k(std::uint64_t basis_index, int n_qubits);

}  // namespace qfci
