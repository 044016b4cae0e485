#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qfci/hamiltonian.hpp"

namespace qfci {

/// One weighted n-qubit Pauli string. ops[q] is the factor acting on qubit q
/// ('I', 'X', 'Y' or 'Z'), qubit 0 leftmost.
struct PauliString {
    Complex coefficient{1.0, 0.0};
    std::string ops;

    int n_qubits() const { return static_cast<int>(ops.size()); }
    int weight() const;  // number of non-identity factors
    bool is_identity() const { return weight() == 0; }
    bool is_diagonal() const;  // only I/Z factors

    // Basis action: P |k> = phase * |k ^ flip_mask>.
    std::uint64_t flip_mask() const;
    Complex basis_phase(std::uint64_t basis_index) const;
};

/// Sum of Pauli strings over a fixed register. Terms with identical factor
/// patterns are combined by merge(); a Hermitian operator then has real
/// coefficients on every string.
class PauliSum {
public:
    explicit PauliSum(int n_qubits);

    static PauliSum identity(int n_qubits, Complex coefficient = {1.0, 0.0});

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliString>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(PauliString term);
    PauliSum& operator+=(const PauliSum& other);
    PauliSum& operator*=(Complex scale);
    PauliSum operator*(const PauliSum& other) const;  // operator product, merged

    // Combines equal factor patterns and drops |coefficient| < drop_tol.
    // Deterministic order: diagonal strings first, then lexicographic.
    void merge(double drop_tol = 1e-14);

    Complex identity_coefficient() const;
    double coefficient_one_norm() const;  // sum of |c| over non-identity strings
    bool is_hermitian(double tol = 1e-12) const;

    // Dense 2^n matrix; register is capped at 16 qubits.
    Eigen::MatrixXcd to_matrix() const;

    // One term per line: "(re,im) IXYZ...", qubit 0 leftmost.
    std::string to_text() const;
    static PauliSum from_text(std::istream& in);

private:
    int n_qubits_;
    std::vector<PauliString> terms_;
};

// Jordan-Wigner images of a+_p and a_p on an n-qubit register: a Z string on
// all qubits below p followed by (X -+ iY)/2 on qubit p. Occupation maps to
// |1>, so sigma_- = |1><0| is the creation half.
PauliSum jw_creation(int p, int n_qubits);
PauliSum jw_annihilation(int p, int n_qubits);

// Qubit image of the full second-quantized Hamiltonian (core energy included
// as an identity term). Built by symbolic products of the JW factors and
// merged; input must pass Hermiticity validation.
PauliSum hamiltonian_to_pauli(const MolecularHamiltonian& h);

}  // namespace qfci
