#include "qfci/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "qfci/errors.hpp"

namespace qfci {

Complex MolecularHamiltonian::one_body(int p, int q) const
{
    auto it = h.find({p, q});
    return it == h.end() ? Complex{0.0, 0.0} : it->second;
}

Complex MolecularHamiltonian::two_body(int p, int q, int r, int s) const
{
    auto it = g.find({p, q, r, s});
    return it == g.end() ? Complex{0.0, 0.0} : it->second;
}

void MolecularHamiltonian::set_one_body(int p, int q, Complex value)
{
    h[{p, q}] = value;
}

void MolecularHamiltonian::set_two_body(int p, int q, int r, int s, Complex value)
{
    g[{p, q, r, s}] = value;
}

namespace {

void check_index(int idx, int n, const char* where)
{
    if (idx < 0 || idx >= n) {
        throw ValidationError(std::string(where) + " index " + std::to_string(idx) +
                              " out of range [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

void MolecularHamiltonian::validate(double tol) const
{
    const int n = n_spin_orbitals;
    for (const auto& [pq, value] : h) {
        check_index(pq.first, n, "one-electron");
        check_index(pq.second, n, "one-electron");
        Complex partner = one_body(pq.second, pq.first);
        if (std::abs(value - std::conj(partner)) > tol) {
            throw ValidationError("h(" + std::to_string(pq.first) + "," +
                                  std::to_string(pq.second) + ") breaks Hermiticity");
        }
        if (!is_relativistic && std::abs(value.imag()) > 1e-12) {
            throw ValidationError("complex one-electron integral in non-relativistic mode");
        }
    }
    for (const auto& [pqrs, value] : g) {
        for (int idx : pqrs) check_index(idx, n, "two-electron");
        Complex partner = two_body(pqrs[2], pqrs[3], pqrs[0], pqrs[1]);
        if (std::abs(value - std::conj(partner)) > tol) {
            throw ValidationError("g(" + std::to_string(pqrs[0]) + "," + std::to_string(pqrs[1]) +
                                  "," + std::to_string(pqrs[2]) + "," + std::to_string(pqrs[3]) +
                                  ") breaks g_pqrs = conj(g_rspq)");
        }
        if (!is_relativistic && std::abs(value.imag()) > 1e-12) {
            throw ValidationError("complex two-electron integral in non-relativistic mode");
        }
    }
}

EnergyWindow::EnergyWindow(double min_energy, double max_energy)
    : e_min(min_energy), e_max(max_energy)
{
    if (!(e_max > e_min)) {
        throw ValidationError("energy window requires e_max > e_min");
    }
}

}  // namespace qfci
