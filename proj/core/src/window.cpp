#include <algorithm>

#include "qfci/hamiltonian.hpp"
#include "qfci/pauli.hpp"

namespace qfci {

EnergyWindow default_window(const MolecularHamiltonian& h)
{
    PauliSum qubit_op = hamiltonian_to_pauli(h);
    const double center = qubit_op.identity_coefficient().real();
    // Every Pauli string has unit operator norm, so the spectrum lies in
    // [c_I - r, c_I + r] with r the coefficient 1-norm.
    double half_width = std::max(qubit_op.coefficient_one_norm(), 0.5);
    half_width *= 1.01;
    return EnergyWindow(center - half_width, center + half_width);
}

}  // namespace qfci
