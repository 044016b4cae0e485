#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfci/fock_matrix.hpp"
#include "qfci/spectral.hpp"
#include "qfci/statevector.hpp"

namespace qfci {

enum class EstimationMode { Pea, IpeaA, IpeaB };

struct PhaseConfig {
    int m_bits = 20;
    int extra_bits = 0;       // extra iterations, m' = m + ceil(log2(2 + 1/2eps))
    int repetitions = 1;      // per-bit majority voting (version B), odd
    EstimationMode mode = EstimationMode::IpeaA;
    std::optional<int> trotter_slices;  // empty = dense spectral propagator

    int total_bits() const { return m_bits + extra_bits; }
    void validate() const;
};

/// Source of the controlled powers U^(2^k) of U = exp(i tau (E_max - H)),
/// either spectral-exact or a first-order Trotter circuit densified on the
/// system register (the circuit remains the definition; powers come from
/// repeated squaring).
class Propagator {
public:
    Propagator(const FockBasisMatrix& h, const EnergyWindow& window);
    Propagator(const PauliSum& hp, const EnergyWindow& window, int trotter_slices);

    int n_qubits() const { return n_qubits_; }
    const EnergyWindow& window() const { return window_; }
    const Eigen::MatrixXcd& power_of_two(int k) const;

private:
    int n_qubits_;
    EnergyWindow window_;
    std::optional<SpectralDecomposition> spectrum_;
    mutable std::vector<Eigen::MatrixXcd> powers_;  // powers_[k] = U^(2^k)
};

struct PhaseRecord {
    std::vector<int> bits;         // measured order: phi_M ... phi_1
    double phase = 0.0;            // 0.phi_1 phi_2 ... phi_M
    double energy = 0.0;           // hartree
    double success_probability = 0.0;  // exact probability of this bit string
    std::vector<double> feedback_turns;            // omega_k per iteration
    std::vector<std::pair<int, int>> vote_tallies; // (zeros, ones) per bit, version B
    bool wraparound_risk = false;
    std::optional<Statevector> residual_state;     // version A system register

    std::string bits_msb_first() const;
    std::string to_json() const;
};

struct PhaseDistribution {
    double delta;
    double p_down;  // probability of the rounded-down m-bit estimator
    double p_up;
};

// Feedback angle in turns for the next IPEA iteration, given already
// measured bits in measurement order (phi_M first). Negative because the
// iteration realizes the inverse QFT.
double feedback_turns(std::span<const int> bits_so_far);

// ceil(log2(2 + 1/(2 epsilon))): extra iterations needed for m-bit accuracy
// with failure probability at most epsilon.
int extra_bits_for(double epsilon);

// E = E_max - phase * (E_max - E_min)
double recover_energy(double phase, const EnergyWindow& window);

// Closed-form PEA success probabilities for a remainder delta at m bits
// (geometric kickback sum followed by the inverse QFT).
PhaseDistribution analytic_pea_distribution(double delta, int m);

// Full multi-qubit PEA on m ancillas: exact probability of every m-bit
// readout b (estimating phase b / 2^m).
std::vector<double> run_pea(const Propagator& prop, const Statevector& psi0, int m_bits);

PhaseRecord run_ipea_a(const Propagator& prop, const Statevector& psi0,
                       const PhaseConfig& cfg, std::uint64_t seed);

PhaseRecord run_ipea_b(const Propagator& prop, const Statevector& psi0,
                       const PhaseConfig& cfg, std::uint64_t seed);

// Exact bit-string distribution of IPEA version A: both ancilla outcomes
// are followed per iteration, pruning branches below prune_tol. Keys are
// readout integers b (phase b / 2^m), directly comparable to run_pea.
std::map<std::uint64_t, double> ipea_a_distribution(const Propagator& prop,
                                                    const Statevector& psi0, int m_bits,
                                                    double prune_tol = 1e-12);

}  // namespace qfci
