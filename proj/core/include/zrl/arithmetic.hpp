#pragma once

#include <cstdint>
#include <vector>

namespace zrl {

/// Moebius function. Requires n >= 1.
int mobius(std::int64_t n);

/// Positive divisors of n in ascending order. Requires n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// Primes p <= bound in ascending order (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Kronecker symbol (d | p) for a prime p.
int kronecker_symbol(std::int64_t d, std::int64_t p);

/// True when d is a fundamental discriminant other than 1.
bool is_fundamental_discriminant(std::int64_t d);

}  // namespace zrl
