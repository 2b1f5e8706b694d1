#pragma once

#include <cstdint>
#include <vector>

namespace orbitsieve {

/// Prime factorization of n >= 1, factors ascending with multiplicity.
/// Trial division up to 10^6, then Brent's rho on remaining cofactors.
std::vector<std::int64_t> factorize(std::int64_t n);

enum class PrimeCounting {
    with_multiplicity,  // Omega(n)
    distinct,           // omega(n)
};

/// Number of prime divisors of n >= 1; throws on n < 1 (0 is in no P_R).
int prime_divisor_count(std::int64_t n,
                        PrimeCounting mode = PrimeCounting::with_multiplicity);

/// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace orbitsieve
