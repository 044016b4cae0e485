#include "qfci/fock_matrix.hpp"

#include <bit>
#include <cstdint>

#include "qfci/errors.hpp"

namespace qfci {

namespace {

constexpr int kDenseCapQubits = 16;

struct BasisAmplitude {
    std::uint64_t state;
    int sign;       // +1 / -1, 0 once annihilated
};

// Applies a_p (destroy=true) or a+_p with the JW-compatible parity sign
// (-1)^{number of occupied orbitals below p}.
BasisAmplitude ladder(BasisAmplitude in, int p, bool destroy)
{
    if (in.sign == 0) return in;
    const std::uint64_t bit = std::uint64_t{1} << p;
    const bool occupied = (in.state & bit) != 0;
    if (destroy != occupied) return {0, 0};
    const std::uint64_t below = in.state & (bit - 1);
    if (std::popcount(below) % 2 != 0) in.sign = -in.sign;
    in.state ^= bit;
    return in;
}

}  // namespace

double FockBasisMatrix::hermiticity_defect() const
{
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

FockBasisMatrix build_fock_matrix(const MolecularHamiltonian& h)
{
    if (h.n_spin_orbitals > kDenseCapQubits) {
        throw CapacityError("dense Fock matrix capped at 16 spin orbitals");
    }
    h.validate();

    const int n = h.n_spin_orbitals;
    const std::uint64_t dim = std::uint64_t{1} << n;
    FockBasisMatrix out;
    out.n_qubits = n;
    out.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));

    for (std::uint64_t k = 0; k < dim; ++k) {
        const auto col = static_cast<Eigen::Index>(k);
        out.matrix(col, col) += h.core_energy;
        for (const auto& [pq, value] : h.h) {
            BasisAmplitude amp = ladder({k, 1}, pq.second, true);
            amp = ladder(amp, pq.first, false);
            if (amp.sign != 0) {
                out.matrix(static_cast<Eigen::Index>(amp.state), col) +=
                    value * static_cast<double>(amp.sign);
            }
        }
        for (const auto& [pqrs, value] : h.g) {
            BasisAmplitude amp = ladder({k, 1}, pqrs[2], true);   // a_r
            amp = ladder(amp, pqrs[3], true);                     // a_s
            amp = ladder(amp, pqrs[1], false);                    // a+_q
            amp = ladder(amp, pqrs[0], false);                    // a+_p
            if (amp.sign != 0) {
                out.matrix(static_cast<Eigen::Index>(amp.state), col) +=
                    0.5 * value * static_cast<double>(amp.sign);
            }
        }
    }
    return out;
}

FockBasisMatrix fock_matrix_from_dense(Eigen::MatrixXcd m)
{
    if (m.rows() != m.cols() || m.rows() == 0 || (m.rows() & (m.rows() - 1)) != 0) {
        throw ValidationError("Fock matrix dimension must be a power of two");
    }
    FockBasisMatrix out;
    out.n_qubits = std::countr_zero(static_cast<std::uint64_t>(m.rows()));
    out.matrix = std::move(m);
    if (out.hermiticity_defect() > 1e-12) {
        throw ValidationError("Fock matrix is not Hermitian");
    }
    return out;
}

double basis_m_k(std::uint64_t basis_index, int n_qubits)
{
    int n_a = 0, n_b = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if ((basis_index >> q) & 1) {
            (q % 2 == 0 ? n_a : n_b) += 1;
        }
    }
    return 0.5 * (n_a - n_b);
}

}  // namespace qfci
