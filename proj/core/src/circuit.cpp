#include "qfci/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qfci/errors.hpp"

namespace qfci {

using std::numbers::pi;

Gate Gate::cnot(int control, int target)
{
    Gate g{GateKind::X, target};
    g.controls.push_back(control);
    return g;
}

Eigen::Matrix2cd Gate::base_matrix() const
{
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix2cd m;
    switch (kind) {
        case GateKind::H:
            m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
            return m;
        case GateKind::Y:  // R_x(-pi/2)
            m << inv_sqrt2, Complex{0, inv_sqrt2}, Complex{0, inv_sqrt2}, inv_sqrt2;
            return m;
        case GateKind::YDag:
            m << inv_sqrt2, Complex{0, -inv_sqrt2}, Complex{0, -inv_sqrt2}, inv_sqrt2;
            return m;
        case GateKind::Rz:
            m << std::exp(Complex{0, -angle / 2}), 0, 0, std::exp(Complex{0, angle / 2});
            return m;
        case GateKind::Phase:
            m << 1, 0, 0, std::exp(Complex{0, angle});
            return m;
        case GateKind::RotJ:
            m << 1, 0, 0, std::exp(Complex{0, 2.0 * pi / std::ldexp(1.0, order)});
            return m;
        case GateKind::RotJDag:
            m << 1, 0, 0, std::exp(Complex{0, -2.0 * pi / std::ldexp(1.0, order)});
            return m;
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
    }
    throw ValidationError("unknown gate kind");
}

bool Gate::touches(int qubit) const
{
    if (target == qubit) return true;
    return std::find(controls.begin(), controls.end(), qubit) != controls.end();
}

void Circuit::append(Gate g)
{
    auto check = [&](int q) {
        if (q < 0 || q >= register_size) {
            throw ValidationError("gate qubit " + std::to_string(q) +
                                  " outside register of size " + std::to_string(register_size));
        }
    };
    check(g.target);
    for (int c : g.controls) {
        check(c);
        if (c == g.target) throw ValidationError("gate control equals target");
    }
    if (!std::isfinite(g.angle)) throw ValidationError("non-finite gate angle");
    gates.push_back(std::move(g));
}

Circuit Circuit::controlled_on(int control, double extra_phase) const
{
    for (const auto& g : gates) {
        if (g.touches(control)) {
            throw ValidationError("control qubit " + std::to_string(control) +
                                  " already used by the circuit");
        }
    }
    Circuit out(std::max(register_size, control + 1));
    const double phase = global_phase + extra_phase;
    if (phase != 0.0) out.append(Gate::phase(control, phase));
    for (Gate g : gates) {
        g.controls.push_back(control);
        out.append(std::move(g));
    }
    return out;
}

namespace {

const char* gate_name(GateKind k)
{
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::Y: return "Y";
        case GateKind::YDag: return "YDG";
        case GateKind::Rz: return "RZ";
        case GateKind::Phase: return "PH";
        case GateKind::RotJ: return "RJ";
        case GateKind::RotJDag: return "RJDG";
        case GateKind::X: return "X";
    }
    return "?";
}

}  // namespace

std::string Circuit::to_text() const
{
    std::ostringstream out;
    out.precision(17);
    if (global_phase != 0.0) out << "# global_phase " << global_phase << '\n';
    for (const auto& g : gates) {
        if (g.kind == GateKind::X && g.controls.size() == 1) {
            out << "CNOT " << g.controls[0] << ',' << g.target << '\n';
            continue;
        }
        if (!g.controls.empty()) out << 'C';
        out << gate_name(g.kind) << ' ';
        for (int c : g.controls) out << c << ',';
        out << g.target;
        if (g.kind == GateKind::Rz || g.kind == GateKind::Phase) out << ' ' << g.angle;
        if (g.kind == GateKind::RotJ || g.kind == GateKind::RotJDag) out << ' ' << g.order;
        out << '\n';
    }
    return out.str();
}

Circuit exp_pauli_string(const PauliString& s, double theta)
{
    if (std::abs(s.coefficient.imag()) > 1e-12) {
        throw ValidationError("Pauli exponential requires a real coefficient");
    }
    std::vector<int> active;
    for (int q = 0; q < s.n_qubits(); ++q) {
        if (s.ops[static_cast<std::size_t>(q)] != 'I') active.push_back(q);
    }
    if (active.empty()) {
        throw ValidationError("identity string is a global phase, not a circuit");
    }

    Circuit c(s.n_qubits());
    auto basis_in = [&](int q) {
        const char f = s.ops[static_cast<std::size_t>(q)];
        if (f == 'X') c.append(Gate::h(q));
        if (f == 'Y') c.append(Gate::y_dag(q));
    };
    auto basis_out = [&](int q) {
        const char f = s.ops[static_cast<std::size_t>(q)];
        if (f == 'X') c.append(Gate::h(q));
        if (f == 'Y') c.append(Gate::y(q));
    };

    for (int q : active) basis_in(q);
    for (std::size_t i = 0; i + 1 < active.size(); ++i) {
        c.append(Gate::cnot(active[i], active[i + 1]));
    }
    c.append(Gate::rz(active.back(), -2.0 * theta * s.coefficient.real()));
    for (std::size_t i = active.size() - 1; i-- > 0;) {
        c.append(Gate::cnot(active[i], active[i + 1]));
    }
    for (int q : active) basis_out(q);
    return c;
}

Circuit compile_propagator(const PauliSum& hp, const EnergyWindow& window,
                           const TrotterPlan& plan)
{
    if (plan.n_slices < 1) throw ValidationError("Trotter slice count must be >= 1");
    if (!hp.is_hermitian()) throw ValidationError("propagator requires a Hermitian PauliSum");

    PauliSum ordered = hp;
    ordered.merge();  // canonical deterministic term order

    const double tau = window.tau();
    Circuit c(ordered.n_qubits());
    // exp(i tau (E_max - H)): per string exp(-i tau c_P P / N), identity
    // terms and E_max as a pure phase.
    c.global_phase = tau * (window.e_max - ordered.identity_coefficient().real());
    const double theta = -tau / plan.n_slices;
    for (int slice = 0; slice < plan.n_slices; ++slice) {
        for (const auto& term : ordered.terms()) {
            if (term.is_identity()) continue;
            Circuit piece = exp_pauli_string({Complex{term.coefficient.real(), 0.0}, term.ops},
                                             theta);
            c.gates.insert(c.gates.end(), piece.gates.begin(), piece.gates.end());
        }
    }
    return c;
}

Circuit qft_circuit(int n)
{
    if (n < 1) throw ValidationError("QFT needs at least one qubit");
    Circuit c(n);
    for (int q = n - 1; q >= 0; --q) {
        c.append(Gate::h(q));
        for (int j = 2; j <= q + 1; ++j) {
            Gate g = Gate::rot_j(q, j);
            g.controls.push_back(q - j + 1);
            c.append(std::move(g));
        }
    }
    return c;
}

Circuit inverse_qft_circuit(int n)
{
    Circuit fwd = qft_circuit(n);
    Circuit c(n);
    for (auto it = fwd.gates.rbegin(); it != fwd.gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::RotJ) g.kind = GateKind::RotJDag;
        c.append(std::move(g));
    }
    return c;
}

std::uint64_t count_controlled_gates(const PauliSum& hp)
{
    PauliSum merged = hp;
    merged.merge();
    std::uint64_t total = 0;
    bool has_identity = false;
    for (const auto& term : merged.terms()) {
        if (term.is_identity()) {
            has_identity = true;
            continue;
        }
        int weight = 0, xy = 0;
        for (char f : term.ops) {
            if (f == 'I') continue;
            ++weight;
            if (f != 'Z') ++xy;
        }
        // two basis changes per X/Y factor, the CNOT ladder both ways, and a
        // controlled Rz as 2 CNOTs + 3 rotations
        total += 2ull * xy + 2ull * (weight - 1) + 5ull;
    }
    if (has_identity) total += 1;  // phase gate on the control
    return total;
}

std::uint64_t count_controlled_gates(const MolecularHamiltonian& h)
{
    return count_controlled_gates(hamiltonian_to_pauli(h));
}

}  // namespace qfci
