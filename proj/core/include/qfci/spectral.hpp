#pragma once

#include <Eigen/Dense>

#include "qfci/fock_matrix.hpp"
#include "qfci/hamiltonian.hpp"

namespace qfci {

/// Full eigensystem of a Hermitian matrix, energies ascending, eigenvectors
/// as orthonormal columns.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    double residual(const Eigen::MatrixXcd& h) const;  // max_i ||H v_i - E_i v_i||
};

SpectralDecomposition diagonalize(const FockBasisMatrix& h);
SpectralDecomposition diagonalize(const Eigen::MatrixXcd& h);

// U = exp(i tau (E_max - H)) from the spectral decomposition.
Eigen::MatrixXcd matrix_exponential(const FockBasisMatrix& h, const EnergyWindow& window);

// U^power without repeated multiplication: V diag(e^{i power tau (E_max-E)}) V+.
Eigen::MatrixXcd propagator_power(const SpectralDecomposition& spec,
                                  const EnergyWindow& window, std::uint64_t power);

}  // namespace qfci
