#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zrl/precision.hpp"
#include "zrl/special_functions.hpp"
#include "zrl/test_function.hpp"

namespace zrl {

/// Ordinary elliptic curve over F_p, described by p and a_p. The Frobenius
/// eigenvalues are the roots of X^2 - a_p X + p.
struct EllipticCurveData {
  std::int64_t p = 0;
  std::int64_t a_p = 0;

  /// Throws DomainError if p is not prime or |a_p| > 2 sqrt(p), and
  /// NotOrdinaryError if p divides a_p.
  static EllipticCurveData make(std::int64_t p, std::int64_t a_p);
  void validate() const;
};

/// (pi, conj(pi)) with Im pi > 0.
std::pair<Complex, Complex> frobenius_eigenvalues(const EllipticCurveData& e);

struct WeilCheck {
  double modulus_error = 0.0;  // max | |pi| - sqrt(p) |
  double norm_error = 0.0;     // |pi conj(pi) - p| / p
  double trace_error = 0.0;    // |pi + conj(pi) - a_p|
  double rotation_defect = 0.0;  // max | |pi| / sqrt(p) - 1 |
  bool pass = false;
};

WeilCheck weil_number_check(const EllipticCurveData& e);
/// Same check on explicitly supplied eigenvalues (for perturbation tests).
WeilCheck weil_number_check(std::int64_t p, std::int64_t a_p, Complex pi, Complex pi_bar);

/// N_n = p^n + 1 - (pi^n + conj(pi)^n), with the trace from the exact Lucas
/// recurrence t_n = a_p t_{n-1} - p t_{n-2}. Requires 1 <= n <= 60; throws
/// PrecisionError when N_n does not fit in 64 bits.
std::int64_t point_counts(const EllipticCurveData& e, int n);

/// pi^n + conj(pi)^n by the recurrence (exact) and by complex powers.
std::int64_t frobenius_trace_power(const EllipticCurveData& e, int n);
/// Floating-point version: throws PrecisionError when the powers are further
/// than 1e-6 from an integer.
std::int64_t point_counts_floating(const EllipticCurveData& e, int n);

/// m_n closed orbits of length n l. epsilon_positive is the sign for k >= 1,
/// epsilon_negative for k <= -1.
struct OrbitCount {
  int n = 1;
  std::int64_t m = 0;
  int epsilon_positive = 1;
  int epsilon_negative = 1;
};

struct OrbitData {
  std::vector<OrbitCount> counts;  // ascending n

  int n_max() const noexcept { return counts.empty() ? 0 : counts.back().n; }
  /// sum_{d | n} d m_d, the number of periodic points of period dividing n.
  std::int64_t fixed_points(int n) const;
};

/// Moebius inversion m_n = (1/n) sum_{d | n} mu(n/d) N_d of the given counts
/// N_1 .. N_{n_max}. Throws ConsistencyError when some m_n is not a
/// nonnegative integer.
OrbitData orbits_from_fixed_points(const std::vector<std::int64_t>& fixed_points);

OrbitData closed_orbit_counts(const EllipticCurveData& e, int n_max);

/// User orbit file: lines "n m_n" (two integers, n >= 1 strictly ascending,
/// m_n >= 0); blank lines and '#' comments are skipped.
OrbitData parse_orbits(std::istream& in);
OrbitData load_orbits(const std::filesystem::path& path);

struct SuspensionSpec {
  enum class Source { Elliptic, UserOrbits, CoveringDegree };

  double l = 1.0;         // base period
  double alpha = 1.0;     // conformal weight, exponent of e^{alpha t}
  int euler_char_base = 0;
  Source source = Source::Elliptic;
  EllipticCurveData curve;
  OrbitData user_orbits;
  std::int64_t q = 0;

  /// l = log p, alpha = 1, torus base (chi = 0).
  static SuspensionSpec elliptic(const EllipticCurveData& e);
  /// Degree-q self covering of the circle: N_n = q^n - 1, alpha = log(q) / l.
  static SuspensionSpec covering(std::int64_t q, double l);
  static SuspensionSpec user(OrbitData orbits, double l, double alpha, int euler_char_base);

  void validate() const;
};

/// Periodic-point counts N_1 .. N_{n_max} of the base map.
std::vector<std::int64_t> fixed_point_counts(const SuspensionSpec& spec, int n_max);

/// Closed orbits with n <= n_max. Covering orbits carry epsilon = -1 for
/// k >= 1 (expanding) and +1 for k <= -1.
OrbitData orbit_data(const SuspensionSpec& spec, int n_max);

/// A spectral ladder {base + 2 pi i k / l : k in Z} entering with a sign.
struct LadderFamily {
  std::string label;
  Complex base;
  int sign;
};

/// H^0: base 0; H^1: log(pi) / l and log(conj pi) / l (principal logs, sign -1);
/// H^2: alpha. Covering suspensions have H^0 and H^1 = {log q / l}.
/// Throws DomainError for user orbits, which carry no spectral data.
std::vector<LadderFamily> ladder_families(const SuspensionSpec& spec);

/// Eigenvalues (log pi + 2 pi i (k + branch)) / l for |k| <= k_max. Changing
/// branch shifts k, leaving the full set unchanged.
std::vector<Complex> h1_ladder(const EllipticCurveData& e, int k_max, int branch = 0);

struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// chi(M) l phi(0) + sum over orbits of l(gamma) [sum_{1 <= k <= k_max} eps phi(k l(gamma))
/// + sum_{-k_max <= k <= -1} eps e^{alpha k l(gamma)} phi(k l(gamma))].
/// tail_bound covers primitive orbits longer than the data; throws
/// TruncationError when it exceeds tolerance.
TruncatedValue geometric_distribution(const TestFunction& phi, const SuspensionSpec& spec,
                                      const OrbitData& orbits, int k_max, double tolerance = 1e-8);

/// l sum_{n=1}^{n_max} N_n [phi(n l) + e^{-alpha n l} phi(-n l)], the same sum
/// regrouped by periodic points. For an elliptic suspension this is
/// log p sum N_n [phi(n log p) + p^{-n} phi(-n log p)].
TruncatedValue nweighted_geometric(const TestFunction& phi, const SuspensionSpec& spec, int n_max,
                                   double tolerance = 1e-8);

/// sum over ladder families of sign * sum_{|k| <= k_max} Phi(base + 2 pi i k / l).
TruncatedValue spectral_distribution(const TestFunction& phi, const SuspensionSpec& spec, int k_max,
                                     const PrecisionConfig& cfg = {}, double tolerance = 1e-8);

struct TraceFormulaReport {
  double spectral = 0.0;
  double geometric = 0.0;
  double nweighted = 0.0;
  double residual = 0.0;                 // |spectral - geometric|
  double geometric_vs_nweighted = 0.0;   // |geometric - chi l phi(0) - nweighted|
  double spectral_tail = 0.0;
  double geometric_tail = 0.0;
  int k_max = 0;
  int n_max = 0;
  bool mobius_consistent = false;
  bool has_weil_check = false;
  WeilCheck weil;
};

TraceFormulaReport check_trace_formula(const TestFunction& phi, const SuspensionSpec& spec, int k_max,
                                       int n_max, const PrecisionConfig& cfg = {},
                                       double tolerance = 1e-8);

/// Fixed-point density epsilon |1 - e^{kappa t}|^{-1} for positive support and
/// epsilon e^t |1 - e^{kappa |t|}|^{-1} for negative support.
double weil_like_Wx(double t, int epsilon, int kappa, SignSide side);

/// integral of phi(t) W_x(t) dt on the sign side of phi. Throws
/// UnsupportedPrincipalValueError when the support straddles 0.
double weil_like_pairing(const TestFunction& phi, int epsilon, int kappa,
                         const PrecisionConfig& cfg = {});

}  // namespace zrl
