#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zrl {

/// Prime ideals of one norm lying over a rational prime p.
struct PrimeIdealClass {
  std::int64_t p;
  std::int64_t norm;  // p or p^2
  int count;          // number of prime ideals over p with this norm
};

/// The number fields handled here: Q and quadratic fields Q(sqrt(D)) given by
/// a fundamental discriminant D.
struct NumberFieldData {
  std::string label;
  std::int64_t discriminant = 1;
  int r1 = 1;
  int r2 = 0;

  static NumberFieldData rationals();

  /// Throws DomainError unless D is a fundamental discriminant.
  static NumberFieldData quadratic(std::int64_t discriminant);

  int degree() const noexcept { return r1 + 2 * r2; }

  /// Prime ideals with norm <= norm_bound, sorted by norm and then by p.
  /// Quadratic fields split p according to the Kronecker symbol (D | p):
  /// +1 gives two ideals of norm p, -1 one of norm p^2, 0 one of norm p.
  std::vector<PrimeIdealClass> prime_ideals(std::int64_t norm_bound) const;
};

}  // namespace zrl
