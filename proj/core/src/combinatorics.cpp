#include "qfci/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qfci {

std::string uint128_to_string(UInt128 v)
{
    if (v == 0) return "0";
    std::string digits;
    while (v > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

UInt128 binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    UInt128 result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // result * (n-k+i) is divisible by i once the previous factors are in.
        UInt128 factor = n - k + i;
        if (result > ~UInt128{0} / factor) {
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") exceeds 128 bits");
        }
        result = result * factor / i;
    }
    return result;
}

double log_binomial(unsigned n, unsigned k)
{
    if (k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

UInt128 fci_dimension_nonrel(unsigned m, unsigned n)
{
    if (n > 2 * m) throw std::domain_error("more electrons than spin orbitals");
    if (n % 2 != 0) throw std::domain_error("closed-shell count requires even n");
    UInt128 half = binomial(m, n / 2);
    if (half != 0 && half > ~UInt128{0} / half) {
        throw std::overflow_error("squared binomial exceeds 128 bits");
    }
    return half * half;
}

UInt128 fci_dimension_rel(unsigned m, unsigned n)
{
    if (n > 2 * m) throw std::domain_error("more electrons than bispinors");
    return binomial(2 * m, n);
}

RelNonrelRatio rel_nonrel_ratio(unsigned m, double k)
{
    if (k <= 0.5) throw std::domain_error("k <= 1/2 would require n > 2m");
    double n_real = double(m) / k;
    auto n = static_cast<unsigned>(std::llround(n_real));
    if (std::abs(n_real - double(n)) > 1e-9 || n == 0 || n % 2 != 0) {
        throw std::domain_error("m/k must be a positive even integer");
    }
    RelNonrelRatio r;
    r.exact = std::exp(log_binomial(2 * m, n) - 2.0 * log_binomial(m, n / 2));
    r.asymptotic = std::sqrt(M_PI * (2.0 * k - 1.0)) / (2.0 * k) * std::sqrt(double(m));
    return r;
}

}  // namespace qfci
