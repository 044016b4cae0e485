#include "qfci/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "qfci/errors.hpp"

namespace qfci {

double SpectralDecomposition::residual(const Eigen::MatrixXcd& h) const
{
    double worst = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double r = (h * eigenvectors.col(i) - eigenvalues[i] * eigenvectors.col(i)).norm();
        worst = std::max(worst, r);
    }
    return worst;
}

SpectralDecomposition diagonalize(const Eigen::MatrixXcd& h)
{
    if (h.rows() != h.cols()) throw ValidationError("matrix is not square");
    if (h.rows() > (1 << 16)) throw CapacityError("dense eigensolve capped at 2^16");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition diagonalize(const FockBasisMatrix& h)
{
    return diagonalize(h.matrix);
}

Eigen::MatrixXcd propagator_power(const SpectralDecomposition& spec,
                                  const EnergyWindow& window, std::uint64_t power)
{
    const Eigen::Index dim = spec.eigenvalues.size();
    Eigen::VectorXcd phases(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        // tau (E_max - E) / (2 pi) per application, reduced modulo one turn
        // before exponentiating: power reaches 2^(m-1) and the raw angle
        // loses precision.
        const double turns = static_cast<double>(power) * (window.e_max - spec.eigenvalues[i]) /
                             window.width();
        const double frac = turns - std::floor(turns);
        phases[i] = std::exp(Complex{0, 2.0 * std::numbers::pi * frac});
    }
    return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

Eigen::MatrixXcd matrix_exponential(const FockBasisMatrix& h, const EnergyWindow& window)
{
    return propagator_power(diagonalize(h), window, 1);
}

}  // namespace qfci
