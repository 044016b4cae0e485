#include "qfci/statevector.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qfci/errors.hpp"

namespace qfci {

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits)
{
    if (n_qubits < 0 || n_qubits > kMaxRegisterQubits) {
        throw CapacityError("register size " + std::to_string(n_qubits) +
                            " outside [0, " + std::to_string(kMaxRegisterQubits) + "]");
    }
    amps_.assign(std::uint64_t{1} << n_qubits, Complex{0, 0});
    amps_[0] = Complex{1, 0};
}

Statevector Statevector::basis_state(int n_qubits, std::uint64_t index)
{
    Statevector psi(n_qubits);
    if (index >= psi.dim()) throw ValidationError("basis index out of range");
    psi.amps_[0] = Complex{0, 0};
    psi.amps_[index] = Complex{1, 0};
    return psi;
}

double Statevector::norm() const
{
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void Statevector::normalize()
{
    const double n = norm();
    if (n == 0.0) throw NumericError("cannot normalize a zero vector");
    for (auto& a : amps_) a /= n;
}

void Statevector::scale(Complex factor)
{
    for (auto& a : amps_) a *= factor;
}

Eigen::VectorXcd Statevector::to_eigen() const
{
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps_.size()));
    for (std::size_t i = 0; i < amps_.size(); ++i) v[static_cast<Eigen::Index>(i)] = amps_[i];
    return v;
}

Statevector Statevector::from_eigen(const Eigen::VectorXcd& v)
{
    const auto dim = static_cast<std::uint64_t>(v.size());
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw ValidationError("statevector length must be a power of two");
    }
    Statevector psi(std::countr_zero(dim));
    for (std::uint64_t i = 0; i < dim; ++i) psi.amps_[i] = v[static_cast<Eigen::Index>(i)];
    return psi;
}

std::string Statevector::to_text() const
{
    std::ostringstream out;
    out.precision(17);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (std::abs(amps_[i]) == 0.0) continue;
        out << i << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
    }
    return out.str();
}

namespace {

bool controls_satisfied(std::uint64_t index, std::uint64_t control_mask)
{
    return (index & control_mask) == control_mask;
}

std::uint64_t control_mask_of(const std::vector<int>& controls)
{
    std::uint64_t mask = 0;
    for (int c : controls) mask |= std::uint64_t{1} << c;
    return mask;
}

}  // namespace

void apply_gate(Statevector& psi, const Gate& g)
{
    if (g.target < 0 || g.target >= psi.n_qubits()) {
        throw ValidationError("gate target outside register");
    }
    for (int c : g.controls) {
        if (c < 0 || c >= psi.n_qubits()) throw ValidationError("gate control outside register");
        if (c == g.target) throw ValidationError("gate control equals target");
    }
    const Eigen::Matrix2cd m = g.base_matrix();
    const std::uint64_t tbit = std::uint64_t{1} << g.target;
    const std::uint64_t cmask = control_mask_of(g.controls);
    auto amps = psi.amplitudes();
    const std::uint64_t dim = psi.dim();
    for (std::uint64_t i = 0; i < dim; ++i) {
        // i ranges over pair bases (target bit 0); controls live on other bits.
        if ((i & tbit) != 0 || !controls_satisfied(i, cmask)) continue;
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | tbit];
        amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
        amps[i | tbit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

void apply_circuit(Statevector& psi, const Circuit& c)
{
    if (c.register_size > psi.n_qubits()) {
        throw ValidationError("circuit register larger than statevector");
    }
    for (const auto& g : c.gates) apply_gate(psi, g);
    if (c.global_phase != 0.0) psi.scale(std::exp(Complex{0, c.global_phase}));
}

void apply_unitary_block(Statevector& psi, const Eigen::MatrixXcd& u,
                         std::span<const int> targets, std::span<const int> controls)
{
    const auto t = static_cast<int>(targets.size());
    const auto block = std::uint64_t{1} << t;
    if (u.rows() != static_cast<Eigen::Index>(block) || u.cols() != u.rows()) {
        throw ValidationError("unitary block dimension does not match target count");
    }
    const double defect = (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
                              .cwiseAbs()
                              .maxCoeff();
    if (defect > 1e-10) throw ValidationError("matrix block is not unitary");

    std::uint64_t tmask = 0;
    for (int q : targets) {
        if (q < 0 || q >= psi.n_qubits()) throw ValidationError("target outside register");
        tmask |= std::uint64_t{1} << q;
    }
    std::uint64_t cmask = 0;
    for (int q : controls) {
        if (q < 0 || q >= psi.n_qubits()) throw ValidationError("control outside register");
        cmask |= std::uint64_t{1} << q;
    }
    if ((tmask & cmask) != 0) throw ValidationError("targets and controls overlap");
    if (std::popcount(tmask) != t) throw ValidationError("duplicate target qubits");

    auto amps = psi.amplitudes();
    const std::uint64_t dim = psi.dim();
    std::vector<Complex> gathered(block), mixed(block);
    // Iterate base indices with all target bits clear.
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & tmask) != 0 || !controls_satisfied(base, cmask)) continue;
        for (std::uint64_t sub = 0; sub < block; ++sub) {
            std::uint64_t idx = base;
            for (int b = 0; b < t; ++b) {
                if ((sub >> b) & 1) idx |= std::uint64_t{1} << targets[static_cast<std::size_t>(b)];
            }
            gathered[sub] = amps[idx];
        }
        for (std::uint64_t row = 0; row < block; ++row) {
            Complex acc{0, 0};
            for (std::uint64_t col = 0; col < block; ++col) {
                acc += u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) *
                       gathered[col];
            }
            mixed[row] = acc;
        }
        for (std::uint64_t sub = 0; sub < block; ++sub) {
            std::uint64_t idx = base;
            for (int b = 0; b < t; ++b) {
                if ((sub >> b) & 1) idx |= std::uint64_t{1} << targets[static_cast<std::size_t>(b)];
            }
            amps[idx] = mixed[sub];
        }
    }
}

std::pair<double, double> qubit_probabilities(const Statevector& psi, int q)
{
    if (q < 0 || q >= psi.n_qubits()) throw ValidationError("qubit index out of range");
    const std::uint64_t bit = std::uint64_t{1} << q;
    double p1 = 0.0;
    auto amps = psi.amplitudes();
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        if (i & bit) p1 += std::norm(amps[i]);
    }
    double p0 = 1.0 - p1;
    // Guard against rounding just outside [0, 1].
    p0 = std::max(0.0, std::min(1.0, p0));
    return {p0, p1};
}

MeasurementResult measure_qubit(Statevector& psi, int q, std::mt19937_64& rng)
{
    auto [p0, p1] = qubit_probabilities(psi, q);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int outcome = unit(rng) < p1 ? 1 : 0;

    const std::uint64_t bit = std::uint64_t{1} << q;
    auto amps = psi.amplitudes();
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        const bool is_one = (i & bit) != 0;
        if (is_one != (outcome == 1)) amps[i] = Complex{0, 0};
    }
    psi.normalize();
    return {outcome, p0, p1};
}

Complex overlap(const Statevector& psi, const Statevector& phi)
{
    if (psi.n_qubits() != phi.n_qubits()) throw ValidationError("register size mismatch");
    Complex acc{0, 0};
    auto a = psi.amplitudes();
    auto b = phi.amplitudes();
    for (std::uint64_t i = 0; i < psi.dim(); ++i) acc += std::conj(b[i]) * a[i];
    return acc;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c)
{
    if (c.register_size > 12) throw CapacityError("dense circuit unitary capped at 12 qubits");
    const std::uint64_t dim = std::uint64_t{1} << c.register_size;
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        Statevector psi = Statevector::basis_state(c.register_size, k);
        apply_circuit(psi, c);
        for (std::uint64_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = psi[r];
        }
    }
    return u;
}

}  // namespace qfci
