#pragma once

#include <cstddef>
#include <vector>

#include "zrl/number_field.hpp"
#include "zrl/precision.hpp"
#include "zrl/special_functions.hpp"
#include "zrl/test_function.hpp"
#include "zrl/zeta_zeros.hpp"

namespace zrl {

/// Archimedean exponent: -2 for real places, -1 for complex places.
struct WeilTermParams {
  int kappa = -2;
};

/// One term of a distribution on R, paired with a test function phi as
///
///   Exponential  coefficient * Phi(exponent)      (the function e^{t s})
///   Delta        coefficient * phi(location)
///   Weil         coefficient * W(phi; kappa)
struct DistributionTerm {
  enum class Kind { Exponential, Delta, Weil };

  Kind kind = Kind::Delta;
  double coefficient = 1.0;
  Complex exponent{};
  double location = 0.0;
  int kappa = -2;

  static DistributionTerm exponential(double coefficient, Complex s);
  static DistributionTerm delta(double coefficient, double location);
  static DistributionTerm weil(double coefficient, int kappa);
};

using Distribution = std::vector<DistributionTerm>;

/// <T, phi> summed in list order with compensated summation.
Complex pair(const Distribution& terms, const TestFunction& phi, const PrecisionConfig& cfg = {});

/// e^0 + e^t - sum over zeros of (e^{t(1/2 + i gamma)} + e^{t(1/2 - i gamma)}),
/// zeros in ascending order.
Distribution spectral_distribution(const ZeroList& zeros);

/// -log|d| delta_0 + sum over prime ideals and k >= 1 with N^k <= norm_cutoff of
/// log N (delta_{k log N} + N^{-k} delta_{-k log N}), plus r1 W_{-2} + r2 W_{-1}.
Distribution geometric_distribution(const NumberFieldData& field, double norm_cutoff);

struct SideValue {
  Complex value{};
  double tail_bound = 0.0;
};

/// Phi(0) - sum_j [Phi(1/2 + i gamma_j) + Phi(1/2 - i gamma_j)] + Phi(1).
///
/// tail_bound estimates the zeros above the list's height T (t_max for a
/// computed list, the last ordinate for a file), using
/// N(T + h) - N(T) <= h log(T / 2 pi) / 2 pi + 4 for the zero density. Throws
/// DomainError on an empty list unless allow_empty is set.
SideValue spectral_side(const TestFunction& phi, const ZeroList& zeros, const NumberFieldData& field,
                        const PrecisionConfig& cfg = {}, bool allow_empty = false);

struct PrimeSideValue {
  double value = 0.0;
  double tail_bound = 0.0;  // Gaussian prime powers above the cutoff; 0 for bumps
  std::size_t terms = 0;    // prime-power terms evaluated
};

/// sum_P log N(P) (sum_{k >= 1} phi(k log N(P)) + sum_{k <= -1} N(P)^k phi(k log N(P)))
/// over N(P)^{|k|} <= norm_cutoff. Throws TruncationError when norm_cutoff is
/// below e^{max |support|}.
PrimeSideValue prime_side(const TestFunction& phi, const NumberFieldData& field, double norm_cutoff,
                          const PrecisionConfig& cfg = {});

/// Positive support: integral of phi(t) / (1 - e^{kappa t});
/// negative support: integral of phi(t) e^t / (1 - e^{kappa |t|}).
/// Throws UnsupportedPrincipalValueError when the support straddles 0.
double weil_term(const TestFunction& phi, WeilTermParams params, const PrecisionConfig& cfg = {});

/// -log|d| phi(0) + prime_side + r1 W_{-2} + r2 W_{-1}.
SideValue geometric_side(const TestFunction& phi, const NumberFieldData& field, double norm_cutoff,
                         const PrecisionConfig& cfg = {});

struct ExplicitFormulaReport {
  Complex spectral{};
  double geometric = 0.0;
  double residual = 0.0;
  // truncations
  std::size_t zeros_used = 0;
  double zero_height = 0.0;
  double zero_tail_bound = 0.0;
  double prime_cutoff = 0.0;
  std::size_t prime_terms = 0;
  double prime_tail_bound = 0.0;
  double gaussian_window_leak = 0.0;
  double quadrature_tolerance = 0.0;

  double total_tail_bound() const noexcept { return zero_tail_bound + prime_tail_bound; }
};

/// Smallest integer cutoff satisfying prime_side's truncation condition.
double default_prime_cutoff(const TestFunction& phi);

ExplicitFormulaReport check_explicit_formula(const TestFunction& phi, const NumberFieldData& field,
                                             const ZeroList& zeros, double norm_cutoff,
                                             const PrecisionConfig& cfg = {},
                                             bool allow_empty_zeros = false);

}  // namespace zrl
