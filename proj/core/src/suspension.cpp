#include "zrl/suspension.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "zrl/arithmetic.hpp"
#include "zrl/error.hpp"
#include "zrl/quadrature.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

__extension__ using i128 = __int128;

constexpr int kMaxPointCountDegree = 60;
constexpr double kRoundingGuard = 1e-6;
constexpr double kWeilTolerance = 1e-12;
constexpr int kMaxTailTerms = 100000;

i128 checked_mul(i128 a, i128 b, int n) {
  i128 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw PrecisionError("point count overflows 128-bit arithmetic at n = " + std::to_string(n));
  }
  return r;
}

i128 checked_sub(i128 a, i128 b, int n) {
  i128 r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw PrecisionError("point count overflows 128-bit arithmetic at n = " + std::to_string(n));
  }
  return r;
}

std::int64_t narrow(i128 v, int n) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw PrecisionError("value at n = " + std::to_string(n) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

void check_degree(int n) {
  if (n < 1 || n > kMaxPointCountDegree) throw DomainError("degree n must be in [1, 60]");
}

// t_n = pi^n + conj(pi)^n exactly.
i128 lucas_trace(const EllipticCurveData& e, int n) {
  i128 prev = 2;
  i128 cur = e.a_p;
  for (int k = 2; k <= n; ++k) {
    const i128 next = checked_sub(checked_mul(e.a_p, cur, k), checked_mul(e.p, prev, k), k);
    prev = cur;
    cur = next;
  }
  return cur;
}

i128 int_pow(std::int64_t base, int n) {
  i128 r = 1;
  for (int k = 1; k <= n; ++k) r = checked_mul(r, base, n);
  return r;
}

// log |phi|(t), atom by atom in log space so huge orbit counts cannot overflow.
double log_abs_atom(const TestFunction::Atom& a, double t) {
  const double u = (t - a.center) / a.width;
  if (a.shape == TestFunction::Shape::Bump) {
    const double q = 1.0 - u * u;
    if (q <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(a.weight)) - 1.0 / q;
  }
  return std::log(std::fabs(a.weight)) - 0.5 * u * u;
}

// Growth rate R with N_n <= R^n.
double periodic_point_growth(const SuspensionSpec& spec) {
  switch (spec.source) {
    case SuspensionSpec::Source::Elliptic: {
      const double r = 1.0 + std::sqrt(static_cast<double>(spec.curve.p));
      return r * r;
    }
    case SuspensionSpec::Source::CoveringDegree:
      return static_cast<double>(spec.q);
    case SuspensionSpec::Source::UserOrbits: {
      // Empirical: the largest N_n^{1/n} seen in the data.
      double r = 1.0;
      for (const auto& c : spec.user_orbits.counts) {
        const auto fixed = spec.user_orbits.fixed_points(c.n);
        if (fixed > 0) r = std::max(r, std::pow(static_cast<double>(fixed), 1.0 / c.n));
      }
      return r;
    }
  }
  return 1.0;
}

// Bound for l sum_{N >= first} R^N (|phi|(N l) + e^{-alpha N l} |phi|(-N l)).
double periodic_tail(const TestFunction& phi, const SuspensionSpec& spec, int first) {
  if (phi.is_zero()) return 0.0;
  const double log_r = std::log(periodic_point_growth(spec));
  const auto [lo, hi] = phi.support();
  const double reach = std::max(std::fabs(lo), std::fabs(hi));
  double total = 0.0;
  for (int n = std::max(first, 1); n < first + kMaxTailTerms; ++n) {
    const double t = n * spec.l;
    double term = 0.0;
    for (const auto& a : phi.atoms()) {
      if (a.weight == 0.0) continue;
      const double base = std::log(spec.l) + n * log_r;
      term += std::exp(base + log_abs_atom(a, t));
      term += std::exp(base - spec.alpha * t + log_abs_atom(a, -t));
    }
    total += term;
    // Past the support every term keeps shrinking once it is negligible.
    if (t > reach && term < 1e-300) break;
    if (!phi.has_gaussian() && t > reach) break;
  }
  return total;
}

// sum_{|k| > K} |Phi(a + 2 pi i k / l)| for one ladder.
double ladder_tail(const TestFunction& phi, double a, double l, int k_max,
                   const PrecisionConfig& cfg) {
  const double step = kTwoPi / l;
  const double y0 = step * (k_max + 1);
  double total = 0.0;
  TestFunction bumps;
  for (const auto& atom : phi.atoms()) {
    if (atom.weight == 0.0) continue;
    if (atom.shape == TestFunction::Shape::Gaussian) {
      // |Phi(a + iy)| = A e^{-beta y^2}; the sum over k > K is at most
      // f(y0) + (1 / step) integral_{y0}^inf f.
      const double s = atom.width;
      const double amp = std::fabs(atom.weight) * std::sqrt(kTwoPi) * s *
                         std::exp(a * atom.center + 0.5 * a * a * s * s);
      const double beta = 0.5 * s * s;
      const double f0 = amp * std::exp(-beta * y0 * y0);
      const double integral = amp * 0.5 * std::sqrt(kPi / beta) * std::erfc(std::sqrt(beta) * y0);
      total += 2.0 * (f0 + integral / step);
    } else {
      bumps += atom.weight * TestFunction::bump(atom.center, atom.width);
    }
  }
  if (!bumps.is_zero()) {
    // |Phi(a + iy)| <= ||(phi e^{at})^{(j)}||_1 / |y|^j, summed over k > K.
    double best = std::numeric_limits<double>::infinity();
    for (int j = 2; j <= 12; ++j) {
      const double c = bump_derivative_l1(bumps, j, a, cfg);
      const double sum = c * (std::pow(y0, -j) + std::pow(y0, 1.0 - j) / ((j - 1.0) * step));
      best = std::min(best, sum);
    }
    total += 2.0 * best;
  }
  return total;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

double weil_like_density(double t, int epsilon, int kappa, SignSide side) {
  if (side == SignSide::PositiveSupport) return epsilon / std::fabs(std::expm1(kappa * t));
  return epsilon * std::exp(t) / std::fabs(std::expm1(kappa * std::fabs(t)));
}

}  // namespace

EllipticCurveData EllipticCurveData::make(std::int64_t p, std::int64_t a_p) {
  EllipticCurveData e{p, a_p};
  e.validate();
  return e;
}

void EllipticCurveData::validate() const {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (a_p % p == 0) throw NotOrdinaryError("p divides a_p: the curve is supersingular");
  if (static_cast<i128>(a_p) * a_p > static_cast<i128>(4) * p) {
    throw DomainError("Hasse bound |a_p| <= 2 sqrt(p) violated");
  }
}

std::pair<Complex, Complex> frobenius_eigenvalues(const EllipticCurveData& e) {
  e.validate();
  const auto a = static_cast<double>(e.a_p);
  const double disc = 4.0 * static_cast<double>(e.p) - a * a;  // > 0 since p is prime
  const Complex pi{0.5 * a, 0.5 * std::sqrt(disc)};
  return {pi, std::conj(pi)};
}

WeilCheck weil_number_check(std::int64_t p, std::int64_t a_p, Complex pi, Complex pi_bar) {
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  WeilCheck w;
  w.modulus_error = std::max(std::fabs(std::abs(pi) - sqrt_p), std::fabs(std::abs(pi_bar) - sqrt_p));
  w.norm_error = std::abs(pi * pi_bar - static_cast<double>(p)) / static_cast<double>(p);
  w.trace_error = std::abs(pi + pi_bar - static_cast<double>(a_p));
  w.rotation_defect = std::max(std::fabs(std::abs(pi) / sqrt_p - 1.0),
                               std::fabs(std::abs(pi_bar) / sqrt_p - 1.0));
  w.pass = w.modulus_error <= kWeilTolerance && w.norm_error <= kWeilTolerance &&
           w.trace_error <= kWeilTolerance && w.rotation_defect <= kWeilTolerance;
  return w;
}

WeilCheck weil_number_check(const EllipticCurveData& e) {
  const auto [pi, pi_bar] = frobenius_eigenvalues(e);
  return weil_number_check(e.p, e.a_p, pi, pi_bar);
}

std::int64_t frobenius_trace_power(const EllipticCurveData& e, int n) {
  e.validate();
  check_degree(n);
  return narrow(lucas_trace(e, n), n);
}

std::int64_t point_counts(const EllipticCurveData& e, int n) {
  e.validate();
  check_degree(n);
  const i128 count = checked_sub(checked_sub(int_pow(e.p, n), -1, n), lucas_trace(e, n), n);
  return narrow(count, n);
}

std::int64_t point_counts_floating(const EllipticCurveData& e, int n) {
  check_degree(n);
  const auto [pi, pi_bar] = frobenius_eigenvalues(e);
  const Complex trace = std::pow(pi, n) + std::pow(pi_bar, n);
  const double count = std::pow(static_cast<double>(e.p), n) + 1.0 - trace.real();
  const double rounded = std::nearbyint(count);
  if (std::fabs(trace.imag()) > kRoundingGuard || std::fabs(count - rounded) > kRoundingGuard ||
      std::fabs(rounded) > 9.0e15) {
    throw PrecisionError("floating point count at n = " + std::to_string(n) +
                         " is not within 1e-6 of an integer");
  }
  return static_cast<std::int64_t>(rounded);
}

std::int64_t OrbitData::fixed_points(int n) const {
  i128 total = 0;
  for (const auto& c : counts) {
    if (c.n > n) break;
    if (n % c.n == 0) total += static_cast<i128>(c.n) * c.m;
  }
  return narrow(total, n);
}

OrbitData orbits_from_fixed_points(const std::vector<std::int64_t>& fixed_points) {
  OrbitData out;
  const int n_max = static_cast<int>(fixed_points.size());
  for (int n = 1; n <= n_max; ++n) {
    i128 acc = 0;
    for (std::int64_t d : divisors(n)) acc += static_cast<i128>(mobius(n / d)) * fixed_points[d - 1];
    if (acc % n != 0 || acc < 0) {
      throw ConsistencyError("orbit count m_" + std::to_string(n) +
                             " is not a nonnegative integer");
    }
    out.counts.push_back({n, narrow(acc / n, n), 1, 1});
  }
  return out;
}

OrbitData closed_orbit_counts(const EllipticCurveData& e, int n_max) {
  check_degree(n_max);
  std::vector<std::int64_t> fixed;
  for (int n = 1; n <= n_max; ++n) fixed.push_back(point_counts(e, n));
  return orbits_from_fixed_points(fixed);
}

OrbitData parse_orbits(std::istream& in) {
  OrbitData out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    long long n = 0;
    long long m = 0;
    std::string extra;
    if (!(fields >> n >> m) || (fields >> extra)) {
      throw ParseError("expected 'n m_n', got '" + line + "'", line_no);
    }
    if (n < 1 || n > kMaxPointCountDegree || m < 0) {
      throw ParseError("need 1 <= n <= 60 and m_n >= 0", line_no);
    }
    if (!out.counts.empty() && n <= out.counts.back().n) {
      throw ParseError("orbit lengths must be strictly ascending", line_no);
    }
    out.counts.push_back({static_cast<int>(n), m, 1, 1});
  }
  return out;
}

OrbitData load_orbits(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open orbit file " + path.string());
  return parse_orbits(in);
}

SuspensionSpec SuspensionSpec::elliptic(const EllipticCurveData& e) {
  e.validate();
  SuspensionSpec s;
  s.source = Source::Elliptic;
  s.curve = e;
  s.l = std::log(static_cast<double>(e.p));
  s.alpha = 1.0;
  s.euler_char_base = 0;
  return s;
}

SuspensionSpec SuspensionSpec::covering(std::int64_t q, double l) {
  SuspensionSpec s;
  s.source = Source::CoveringDegree;
  s.q = q;
  s.l = l;
  s.alpha = std::log(static_cast<double>(q)) / l;
  s.euler_char_base = 0;
  s.validate();
  return s;
}

SuspensionSpec SuspensionSpec::user(OrbitData orbits, double l, double alpha, int euler_char_base) {
  SuspensionSpec s;
  s.source = Source::UserOrbits;
  s.user_orbits = std::move(orbits);
  s.l = l;
  s.alpha = alpha;
  s.euler_char_base = euler_char_base;
  s.validate();
  return s;
}

void SuspensionSpec::validate() const {
  if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("suspension period l must be > 0");
  if (!std::isfinite(alpha)) throw DomainError("conformal weight must be finite");
  switch (source) {
    case Source::Elliptic:
      curve.validate();
      if (euler_char_base != 0) throw DomainError("elliptic suspension has a torus base (chi = 0)");
      break;
    case Source::CoveringDegree:
      if (q < 2) throw DomainError("covering degree must be >= 2");
      break;
    case Source::UserOrbits:
      for (const auto& c : user_orbits.counts) {
        if (c.m < 0) throw DomainError("orbit counts must be >= 0");
      }
      break;
  }
}

std::vector<std::int64_t> fixed_point_counts(const SuspensionSpec& spec, int n_max) {
  spec.validate();
  check_degree(n_max);
  std::vector<std::int64_t> out;
  for (int n = 1; n <= n_max; ++n) {
    switch (spec.source) {
      case SuspensionSpec::Source::Elliptic:
        out.push_back(point_counts(spec.curve, n));
        break;
      case SuspensionSpec::Source::CoveringDegree:
        out.push_back(narrow(int_pow(spec.q, n) - 1, n));
        break;
      case SuspensionSpec::Source::UserOrbits:
        out.push_back(spec.user_orbits.fixed_points(n));
        break;
    }
  }
  return out;
}

OrbitData orbit_data(const SuspensionSpec& spec, int n_max) {
  if (spec.source == SuspensionSpec::Source::UserOrbits) {
    OrbitData out;
    for (const auto& c : spec.user_orbits.counts) {
      if (c.n <= n_max) out.counts.push_back(c);
    }
    return out;
  }
  OrbitData out = orbits_from_fixed_points(fixed_point_counts(spec, n_max));
  if (spec.source == SuspensionSpec::Source::CoveringDegree) {
    // z -> z^q expands along k >= 1 iterates and contracts along k <= -1.
    for (auto& c : out.counts) c.epsilon_positive = -1;
  }
  return out;
}

std::vector<LadderFamily> ladder_families(const SuspensionSpec& spec) {
  spec.validate();
  switch (spec.source) {
    case SuspensionSpec::Source::Elliptic: {
      const auto [pi, pi_bar] = frobenius_eigenvalues(spec.curve);
      return {{"H0", {0.0, 0.0}, 1},
              {"H1", std::log(pi) / spec.l, -1},
              {"H1_conj", std::log(pi_bar) / spec.l, -1},
              {"H2", {spec.alpha, 0.0}, 1}};
    }
    case SuspensionSpec::Source::CoveringDegree:
      return {{"H0", {0.0, 0.0}, 1},
              {"H1", {std::log(static_cast<double>(spec.q)) / spec.l, 0.0}, -1}};
    case SuspensionSpec::Source::UserOrbits:
      break;
  }
  throw DomainError("user orbit data carries no spectral ladders");
}

std::vector<Complex> h1_ladder(const EllipticCurveData& e, int k_max, int branch) {
  const auto [pi, pi_bar] = frobenius_eigenvalues(e);
  const double l = std::log(static_cast<double>(e.p));
  const Complex log_pi = std::log(pi) + Complex{0.0, kTwoPi * branch};
  std::vector<Complex> out;
  for (int k = -k_max; k <= k_max; ++k) out.push_back((log_pi + Complex{0.0, kTwoPi * k}) / l);
  return out;
}

TruncatedValue geometric_distribution(const TestFunction& phi, const SuspensionSpec& spec,
                                      const OrbitData& orbits, int k_max, double tolerance) {
  spec.validate();
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  TruncatedValue out;
  if (phi.is_zero()) return out;
  CompensatedSum sum;
  sum += spec.euler_char_base * spec.l * phi(0.0);
  for (const auto& orbit : orbits.counts) {
    if (orbit.m == 0) continue;
    const double length = orbit.n * spec.l;
    const double weight = static_cast<double>(orbit.m) * length;
    for (int k = 1; k <= k_max; ++k) sum += weight * orbit.epsilon_positive * phi(k * length);
    for (int k = 1; k <= k_max; ++k) {
      sum += weight * orbit.epsilon_negative * std::exp(-spec.alpha * k * length) * phi(-k * length);
    }
  }
  out.value = sum.value();
  out.tail_bound = periodic_tail(phi, spec, std::min(orbits.n_max(), k_max) + 1);
  if (out.tail_bound > tolerance) {
    throw TruncationError("orbit truncation tail " + std::to_string(out.tail_bound) +
                          " exceeds tolerance");
  }
  return out;
}

TruncatedValue nweighted_geometric(const TestFunction& phi, const SuspensionSpec& spec, int n_max,
                                   double tolerance) {
  TruncatedValue out;
  if (phi.is_zero()) return out;
  const auto counts = fixed_point_counts(spec, n_max);
  const int sign = spec.source == SuspensionSpec::Source::CoveringDegree ? -1 : 1;
  CompensatedSum sum;
  for (int n = 1; n <= n_max; ++n) {
    const double t = n * spec.l;
    const double weight = spec.l * static_cast<double>(counts[n - 1]);
    sum += sign * weight * phi(t);
  }
  for (int n = 1; n <= n_max; ++n) {
    const double t = n * spec.l;
    const double weight = spec.l * static_cast<double>(counts[n - 1]);
    sum += weight * std::exp(-spec.alpha * t) * phi(-t);
  }
  out.value = sum.value();
  out.tail_bound = periodic_tail(phi, spec, n_max + 1);
  if (out.tail_bound > tolerance) {
    throw TruncationError("periodic-point tail " + std::to_string(out.tail_bound) +
                          " exceeds tolerance");
  }
  return out;
}

TruncatedValue spectral_distribution(const TestFunction& phi, const SuspensionSpec& spec, int k_max,
                                     const PrecisionConfig& cfg, double tolerance) {
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  const auto families = ladder_families(spec);
  TruncatedValue out;
  if (phi.is_zero()) return out;
  CompensatedComplexSum sum;
  for (const auto& family : families) {
    for (int k = -k_max; k <= k_max; ++k) {
      const Complex s = family.base + Complex{0.0, kTwoPi * k / spec.l};
      sum += static_cast<double>(family.sign) * transform(phi, s, cfg);
    }
    out.tail_bound += ladder_tail(phi, family.base.real(), spec.l, k_max, cfg);
  }
  out.value = sum.value().real();
  if (out.tail_bound > tolerance) {
    throw TruncationError("ladder truncation tail " + std::to_string(out.tail_bound) +
                          " exceeds tolerance");
  }
  return out;
}

TraceFormulaReport check_trace_formula(const TestFunction& phi, const SuspensionSpec& spec, int k_max,
                                       int n_max, const PrecisionConfig& cfg, double tolerance) {
  TraceFormulaReport r;
  r.k_max = k_max;
  r.n_max = n_max;
  const OrbitData orbits = orbit_data(spec, n_max);
  const auto counts = fixed_point_counts(spec, n_max);
  r.mobius_consistent = true;
  for (int n = 1; n <= n_max; ++n) {
    if (orbits.fixed_points(n) != counts[n - 1]) r.mobius_consistent = false;
  }
  if (spec.source == SuspensionSpec::Source::Elliptic) {
    r.has_weil_check = true;
    r.weil = weil_number_check(spec.curve);
  }
  if (phi.is_zero()) return r;

  const TruncatedValue spectral = spectral_distribution(phi, spec, k_max, cfg, tolerance);
  const TruncatedValue geometric = geometric_distribution(phi, spec, orbits, k_max, tolerance);
  const TruncatedValue nweighted = nweighted_geometric(phi, spec, n_max, tolerance);
  r.spectral = spectral.value;
  r.geometric = geometric.value;
  r.nweighted = nweighted.value;
  r.residual = std::fabs(spectral.value - geometric.value);
  r.geometric_vs_nweighted =
      std::fabs(geometric.value - spec.euler_char_base * spec.l * phi(0.0) - nweighted.value);
  r.spectral_tail = spectral.tail_bound;
  r.geometric_tail = geometric.tail_bound;
  return r;
}

double weil_like_Wx(double t, int epsilon, int kappa, SignSide side) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
  if (kappa >= 0) throw DomainError("kappa must be negative");
  if (side == SignSide::StraddlesZero) {
    throw UnsupportedPrincipalValueError("W_x is only defined on one sign side");
  }
  if (t == 0.0) throw DomainError("W_x is singular at t = 0");
  return weil_like_density(t, epsilon, kappa, side);
}

double weil_like_pairing(const TestFunction& phi, int epsilon, int kappa, const PrecisionConfig& cfg) {
  if (phi.is_zero()) return 0.0;
  const SignSide side = phi.sign_side();
  if (side == SignSide::StraddlesZero) {
    throw UnsupportedPrincipalValueError("W_x pairing needs phi supported on one side of 0");
  }
  CompensatedSum sum;
  for (const auto& a : phi.atoms()) {
    if (a.weight == 0.0) continue;
    const std::function<double(double)> f = [&](double t) {
      const double u = (t - a.center) / a.width;
      double value = 0.0;
      if (a.shape == TestFunction::Shape::Bump) {
        value = u * u < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
      } else {
        value = std::exp(-0.5 * u * u);
      }
      return value * weil_like_Wx(t, epsilon, kappa, side);
    };
    sum += a.weight * integrate_real(f, a.lo(), a.hi(), cfg);
  }
  return sum.value();
}

}  // namespace zrl
