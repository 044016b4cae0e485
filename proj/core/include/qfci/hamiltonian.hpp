#pragma once

#include <array>
#include <complex>
#include <map>
#include <numbers>
#include <utility>

namespace qfci {

using Complex = std::complex<double>;

/// Second-quantized molecular Hamiltonian over spin orbitals (bispinors in
/// the relativistic case),
///
///   H = E_core + sum_pq h_pq a+_p a_q + 1/2 sum_pqrs g_pqrs a+_p a+_q a_s a_r,
///
/// with g in the physicist index convention. Spin orbitals are interleaved:
/// spatial orbital p maps to 2p (alpha / Kramers A) and 2p+1 (beta / Kramers B),
/// so Kramers partners sit on adjacent qubits.
struct MolecularHamiltonian {
    int n_spin_orbitals = 0;
    int n_electrons = 0;
    double core_energy = 0.0;
    bool is_relativistic = false;  // complex integrals permitted

    std::map<std::pair<int, int>, Complex> h;
    std::map<std::array<int, 4>, Complex> g;

    Complex one_body(int p, int q) const;
    Complex two_body(int p, int q, int r, int s) const;

    void set_one_body(int p, int q, Complex value);
    void set_two_body(int p, int q, int r, int s, Complex value);

    // Checks index ranges, h_pq = conj(h_qp), g_pqrs = conj(g_rspq), and
    // (non-relativistic mode) vanishing imaginary parts. Throws ValidationError.
    void validate(double tol = 1e-10) const;
};

struct EnergyWindow {
    double e_min;
    double e_max;

    EnergyWindow(double min_energy, double max_energy);

    double tau() const { return 2.0 * std::numbers::pi / (e_max - e_min); }
    double width() const { return e_max - e_min; }
    bool contains(double energy) const { return energy >= e_min && energy <= e_max; }
};

// Window guaranteed to bracket the full spectrum: the qubit-operator
// coefficient 1-norm bounds |E - c_I| for every eigenvalue E. A minimum
// half-width of 0.5 hartree keeps tau finite on degenerate toy spectra,
// and the result is widened by 1%.
EnergyWindow default_window(const MolecularHamiltonian& h);

}  // namespace qfci
