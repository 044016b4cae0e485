#pragma once

#include <cstdint>
#include <string>

namespace qfci {

// 128-bit counts cover FCI dimensions up to ~128 spin orbitals; larger
// studies should switch to log_binomial.
using UInt128 = unsigned __int128;

std::string uint128_to_string(UInt128 v);

// Exact binomial coefficient. Throws std::overflow_error if the value
// (or an intermediate product) exceeds 128 bits.
UInt128 binomial(unsigned n, unsigned k);

// ln C(n, k) via lgamma, usable far beyond the exact range.
double log_binomial(unsigned n, unsigned k);

// Number of Slater determinants for a closed-shell FCI expansion with
// n electrons in m spatial orbitals: C(m, n/2)^2. Odd n is a domain error.
UInt128 fci_dimension_nonrel(unsigned m, unsigned n);

// Kramers-restricted relativistic determinant count for n electrons in
// m Kramers pairs: C(2m, n), i.e. the Vandermonde sum over M_K blocks.
UInt128 fci_dimension_rel(unsigned m, unsigned n);

struct RelNonrelRatio {
    double exact;       // C(2m, n) / C(m, n/2)^2 with n = m/k
    double asymptotic;  // sqrt(pi (2k-1)) / (2k) * sqrt(m)
};

// Matrix-size ratio between the relativistic and non-relativistic FCI
// problems at filling fraction k = m/n. Requires n = m/k to be a positive
// even integer; k <= 1/2 is a domain error (would need n > 2m).
RelNonrelRatio rel_nonrel_ratio(unsigned m, double k);

}  // namespace qfci
