#include "qfci/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "qfci/errors.hpp"

namespace qfci {

namespace {

constexpr int kDenseCapQubits = 16;

bool valid_factor(char c)
{
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

// Single-qubit product a*b = phase * c over {I,X,Y,Z}.
struct FactorProduct {
    Complex phase;
    char factor;
};

FactorProduct multiply_factors(char a, char b)
{
    if (a == 'I') return {Complex{1, 0}, b};
    if (b == 'I') return {Complex{1, 0}, a};
    if (a == b) return {Complex{1, 0}, 'I'};
    // cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order flips the sign
    static constexpr char kThird[3][3] = {
        // X    Y    Z
        {' ', 'Z', 'Y'},  // X*
        {'Z', ' ', 'X'},  // Y*
        {'Y', 'X', ' '},  // Z*
    };
    auto idx = [](char c) { return c == 'X' ? 0 : c == 'Y' ? 1 : 2; };
    int ia = idx(a), ib = idx(b);
    bool forward = (ib - ia + 3) % 3 == 1;  // X->Y->Z->X
    return {forward ? Complex{0, 1} : Complex{0, -1}, kThird[ia][ib]};
}

}  // namespace

int PauliString::weight() const
{
    return static_cast<int>(std::count_if(ops.begin(), ops.end(),
                                          [](char c) { return c != 'I'; }));
}

bool PauliString::is_diagonal() const
{
    return std::all_of(ops.begin(), ops.end(),
                       [](char c) { return c == 'I' || c == 'Z'; });
}

std::uint64_t PauliString::flip_mask() const
{
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < ops.size(); ++q) {
        if (ops[q] == 'X' || ops[q] == 'Y') mask |= std::uint64_t{1} << q;
    }
    return mask;
}

Complex PauliString::basis_phase(std::uint64_t k) const
{
    // X|b> = |1-b>;  Y|b> = i(-1)^b |1-b>;  Z|b> = (-1)^b |b>.
    Complex phase = coefficient;
    for (std::size_t q = 0; q < ops.size(); ++q) {
        const bool bit = (k >> q) & 1;
        switch (ops[q]) {
            case 'Y': phase *= bit ? Complex{0, -1} : Complex{0, 1}; break;
            case 'Z': if (bit) phase = -phase; break;
            default: break;
        }
    }
    return phase;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits)
{
    if (n_qubits < 0) throw ValidationError("negative register size");
}

PauliSum PauliSum::identity(int n_qubits, Complex coefficient)
{
    PauliSum s(n_qubits);
    s.add({coefficient, std::string(static_cast<std::size_t>(n_qubits), 'I')});
    return s;
}

void PauliSum::add(PauliString term)
{
    if (term.n_qubits() != n_qubits_) {
        throw ValidationError("Pauli string length does not match register size");
    }
    for (char c : term.ops) {
        if (!valid_factor(c)) throw ValidationError("invalid Pauli factor");
    }
    terms_.push_back(std::move(term));
}

PauliSum& PauliSum::operator+=(const PauliSum& other)
{
    if (other.n_qubits_ != n_qubits_) throw ValidationError("register size mismatch");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

PauliSum& PauliSum::operator*=(Complex scale)
{
    for (auto& t : terms_) t.coefficient *= scale;
    return *this;
}

PauliSum PauliSum::operator*(const PauliSum& other) const
{
    if (other.n_qubits_ != n_qubits_) throw ValidationError("register size mismatch");
    PauliSum out(n_qubits_);
    out.terms_.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            PauliString prod;
            prod.coefficient = a.coefficient * b.coefficient;
            prod.ops.resize(static_cast<std::size_t>(n_qubits_));
            for (int q = 0; q < n_qubits_; ++q) {
                auto [phase, factor] = multiply_factors(a.ops[q], b.ops[q]);
                prod.coefficient *= phase;
                prod.ops[q] = factor;
            }
            out.terms_.push_back(std::move(prod));
        }
    }
    out.merge();
    return out;
}

void PauliSum::merge(double drop_tol)
{
    std::unordered_map<std::string, Complex> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) merged[t.ops] += t.coefficient;

    terms_.clear();
    for (auto& [ops, coeff] : merged) {
        if (std::abs(coeff) < drop_tol) continue;
        terms_.push_back({coeff, ops});
    }
    std::sort(terms_.begin(), terms_.end(), [](const PauliString& a, const PauliString& b) {
        const bool da = a.is_diagonal(), db = b.is_diagonal();
        if (da != db) return da;
        return a.ops < b.ops;
    });
}

Complex PauliSum::identity_coefficient() const
{
    Complex c{0, 0};
    for (const auto& t : terms_) {
        if (t.is_identity()) c += t.coefficient;
    }
    return c;
}

double PauliSum::coefficient_one_norm() const
{
    double norm = 0.0;
    for (const auto& t : terms_) {
        if (!t.is_identity()) norm += std::abs(t.coefficient);
    }
    return norm;
}

bool PauliSum::is_hermitian(double tol) const
{
    PauliSum copy = *this;
    copy.merge(0.0);
    for (const auto& t : copy.terms_) {
        if (std::abs(t.coefficient.imag()) > tol) return false;
    }
    return true;
}

Eigen::MatrixXcd PauliSum::to_matrix() const
{
    if (n_qubits_ > kDenseCapQubits) {
        throw CapacityError("dense Pauli matrix capped at 16 qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (const auto& t : terms_) {
        const std::uint64_t flip = t.flip_mask();
        for (std::uint64_t k = 0; k < dim; ++k) {
            m(static_cast<Eigen::Index>(k ^ flip), static_cast<Eigen::Index>(k)) +=
                t.basis_phase(k);
        }
    }
    return m;
}

std::string PauliSum::to_text() const
{
    std::ostringstream out;
    out.precision(17);
    for (const auto& t : terms_) {
        out << '(' << t.coefficient.real() << ',' << t.coefficient.imag() << ") "
            << t.ops << '\n';
    }
    return out.str();
}

PauliSum PauliSum::from_text(std::istream& in)
{
    std::vector<PauliString> terms;
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char open = 0, comma = 0, close = 0;
        double re = 0, im = 0;
        std::string ops;
        if (!(ls >> open >> re >> comma >> im >> close >> ops) || open != '(' ||
            comma != ',' || close != ')') {
            throw ParseError("bad Pauli term line: " + line);
        }
        if (n < 0) n = static_cast<int>(ops.size());
        if (static_cast<int>(ops.size()) != n) {
            throw ParseError("inconsistent string length in Pauli text");
        }
        terms.push_back({Complex{re, im}, ops});
    }
    if (n < 0) throw ParseError("empty Pauli text");
    PauliSum s(n);
    for (auto& t : terms) s.add(std::move(t));
    return s;
}

namespace {

// (Z...Z on qubits < p) x (X -+ iY)/2 on qubit p.
PauliSum jw_ladder(int p, int n, bool creation)
{
    if (p < 0 || p >= n) {
        throw ValidationError("orbital index " + std::to_string(p) +
                              " out of range for register " + std::to_string(n));
    }
    std::string base(static_cast<std::size_t>(n), 'I');
    for (int j = 0; j < p; ++j) base[static_cast<std::size_t>(j)] = 'Z';

    PauliSum s(n);
    std::string with_x = base, with_y = base;
    with_x[static_cast<std::size_t>(p)] = 'X';
    with_y[static_cast<std::size_t>(p)] = 'Y';
    s.add({Complex{0.5, 0.0}, with_x});
    s.add({creation ? Complex{0.0, -0.5} : Complex{0.0, 0.5}, with_y});
    return s;
}

}  // namespace

PauliSum jw_creation(int p, int n_qubits) { return jw_ladder(p, n_qubits, true); }

PauliSum jw_annihilation(int p, int n_qubits) { return jw_ladder(p, n_qubits, false); }

PauliSum hamiltonian_to_pauli(const MolecularHamiltonian& h)
{
    h.validate();
    const int n = h.n_spin_orbitals;
    PauliSum sum(n);

    if (h.core_energy != 0.0) {
        sum += PauliSum::identity(n, Complex{h.core_energy, 0.0});
    }
    for (const auto& [pq, value] : h.h) {
        if (value == Complex{0.0, 0.0}) continue;
        PauliSum term = jw_creation(pq.first, n) * jw_annihilation(pq.second, n);
        term *= value;
        sum += term;
    }
    for (const auto& [pqrs, value] : h.g) {
        if (value == Complex{0.0, 0.0}) continue;
        const auto [p, q, r, s] = pqrs;
        if (p == q || r == s) continue;  // a+_p a+_q or a_s a_r vanishes
        PauliSum term = jw_creation(p, n) * jw_creation(q, n);
        term = term * jw_annihilation(s, n);
        term = term * jw_annihilation(r, n);
        term *= 0.5 * value;
        sum += term;
    }
    sum.merge();
    return sum;
}

}  // namespace qfci
