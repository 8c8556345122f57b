#include "zrl/arithmetic.hpp"

#include <algorithm>
#include <cstdlib>

#include "zrl/error.hpp"

namespace zrl {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": argument must be >= 1");
}

__extension__ using u128 = unsigned __int128;

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  u128 result = 1;
  u128 b = static_cast<u128>(((base % mod) + mod) % mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % static_cast<u128>(mod);
    b = b * b % static_cast<u128>(mod);
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool squarefree(std::int64_t n) {
  n = std::llabs(n);
  for (std::int64_t q = 2; q <= n / q; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

}  // namespace

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (std::int64_t q = 2; q <= n / q; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q <= n / q; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= bound; m += p) composite[m] = true;
  }
  return primes;
}

int kronecker_symbol(std::int64_t d, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("kronecker_symbol: p must be prime");
  if (p == 2) {
    if (d % 2 == 0) return 0;
    const std::int64_t r = ((d % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const std::int64_t r = ((d % p) + p) % p;
  if (r == 0) return 0;
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree(m);
}

}  // namespace zrl
