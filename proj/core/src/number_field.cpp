#include "zrl/number_field.hpp"

#include <algorithm>

#include "zrl/arithmetic.hpp"
#include "zrl/error.hpp"

namespace zrl {

NumberFieldData NumberFieldData::rationals() { return {"Q", 1, 1, 0}; }

NumberFieldData NumberFieldData::quadratic(std::int64_t discriminant) {
  if (!is_fundamental_discriminant(discriminant)) {
    throw DomainError("not a fundamental discriminant: " + std::to_string(discriminant));
  }
  NumberFieldData k;
  k.label = "Q(sqrt(" + std::to_string(discriminant) + "))";
  k.discriminant = discriminant;
  k.r1 = discriminant > 0 ? 2 : 0;
  k.r2 = discriminant > 0 ? 0 : 1;
  return k;
}

std::vector<PrimeIdealClass> NumberFieldData::prime_ideals(std::int64_t norm_bound) const {
  std::vector<PrimeIdealClass> out;
  if (norm_bound < 2) return out;
  for (std::int64_t p : primes_up_to(norm_bound)) {
    if (discriminant == 1) {
      out.push_back({p, p, 1});
      continue;
    }
    switch (kronecker_symbol(discriminant, p)) {
      case 1:
        out.push_back({p, p, 2});
        break;
      case 0:
        out.push_back({p, p, 1});
        break;
      default:
        if (p <= norm_bound / p) out.push_back({p, p * p, 1});
        break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeIdealClass& a, const PrimeIdealClass& b) {
    return a.norm < b.norm;
  });
  return out;
}

}  // namespace zrl
