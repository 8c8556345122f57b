#include "zrl/explicit_formula.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "zrl/error.hpp"
#include "zrl/quadrature.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi / 2)

std::string lowercase(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

// A zeros file may name its field either by the library label or by the CLI
// spelling (q, disc:D).
bool label_matches(const std::string& label, const NumberFieldData& field) {
  if (label.empty()) return true;
  const std::string l = lowercase(label);
  if (l == lowercase(field.label)) return true;
  if (field.discriminant == 1) return l == "q";
  return l == "disc:" + std::to_string(field.discriminant);
}

// Trudgian's explicit bound |S(t)| <= 0.112 log t + 0.278 log log t + 2.51.
double s_bound(double t) { return 0.112 * std::log(t) + 0.278 * std::log(std::log(t)) + 2.51; }

// Sum over zeros above T of |Phi(1/2 + i gamma)|, from a decreasing majorant f
// and the zero density (deg log(t / 2 pi) + log|d|) / 2 pi:
//   2 deg S(2T) f(T) + integral_T^inf f(t) density(t) dt.
double gaussian_zero_tail(const TestFunction::Atom& a, double T, const NumberFieldData& field) {
  const double sigma = a.width;
  const double amp = std::fabs(a.weight) * std::sqrt(kTwoPi) * sigma *
                     std::exp(0.5 * a.center + sigma * sigma / 8.0);
  const double alpha = 0.5 * sigma * sigma;  // f(t) = amp e^{-alpha t^2}
  const double f_T = amp * std::exp(-alpha * T * T);
  // Integrals of e^{-alpha t^2} and (t - T) e^{-alpha t^2} over (T, inf).
  const double i0 = 0.5 * std::sqrt(kPi / alpha) * std::erfc(std::sqrt(alpha) * T);
  const double i1 = std::exp(-alpha * T * T) / (2.0 * alpha) - T * i0;
  const double deg = field.degree();
  const double log_d = std::log(std::fabs(static_cast<double>(field.discriminant)));
  // log(t / 2 pi) <= log(T / 2 pi) + (t - T) / T
  const double density_integral =
      (deg * (std::log(T / kTwoPi) * i0 + i1 / T) + log_d * i0) / kTwoPi;
  return 2.0 * deg * s_bound(2.0 * T) * f_T + amp * density_integral;
}

// |Phi(1/2 + i gamma)| <= ||psi^{(k)}||_1 / gamma^k with psi = phi e^{t/2}.
double bump_zero_tail(const TestFunction& bumps, double T, const NumberFieldData& field,
                      const PrecisionConfig& cfg) {
  const double deg = field.degree();
  const double log_d = std::log(std::fabs(static_cast<double>(field.discriminant)));
  const double log_ratio = std::log(T / kTwoPi);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 2; k <= 12; ++k) {
    const double c_k = bump_derivative_l1(bumps, k, 0.5, cfg);
    const double km1 = k - 1.0;
    const double t_pow = std::pow(T, -k);
    // integral_T^inf t^{-k} log(t / 2 pi) dt and integral_T^inf t^{-k} dt
    const double log_moment = T * t_pow * (log_ratio / km1 + 1.0 / (km1 * km1));
    const double moment = T * t_pow / km1;
    const double bound =
        c_k * (2.0 * deg * s_bound(2.0 * T) * t_pow + (deg * log_moment + log_d * moment) / kTwoPi);
    best = std::min(best, bound);
  }
  return best;
}

double zero_tail_bound(const TestFunction& phi, double T, const NumberFieldData& field,
                       const PrecisionConfig& cfg) {
  double total = 0.0;
  TestFunction bumps;
  for (const auto& a : phi.atoms()) {
    if (a.weight == 0.0) continue;
    if (a.shape == TestFunction::Shape::Gaussian) {
      total += gaussian_zero_tail(a, T, field);
    } else {
      TestFunction single = TestFunction::bump(a.center, a.width);
      bumps += a.weight * single;
    }
  }
  if (!bumps.is_zero()) total += bump_zero_tail(bumps, T, field, cfg);
  return 2.0 * total;  // both conjugate ordinates
}

// Prime ideal powers with norm above X, for one Gaussian atom g:
//   deg [sum_{n > X} log n g(log n) + sum_{n > X} (log n / n) g(-log n)]
// with each monotone sum bounded by its first term plus the integral.
double gaussian_prime_tail(const TestFunction::Atom& a, double X, int degree) {
  const double c = a.center;
  const double s = a.width;
  const double L = std::log(X);
  const auto g = [&](double u) { return std::exp(-0.5 * (u - c) * (u - c) / (s * s)); };
  const double mu = c + s * s;
  const double pos_integral =
      std::exp(c + 0.5 * s * s) *
      (s * s * std::exp(-0.5 * (L - mu) * (L - mu) / (s * s)) +
       mu * s * kSqrtHalfPi * std::erfc((L - mu) / (s * std::sqrt(2.0))));
  const double neg_integral = s * s * std::exp(-0.5 * (L + c) * (L + c) / (s * s)) -
                              c * s * kSqrtHalfPi * std::erfc((L + c) / (s * std::sqrt(2.0)));
  const double bound = L * g(L) + pos_integral + L * g(-L) / X + std::max(0.0, neg_integral);
  return std::fabs(a.weight) * degree * bound;
}

void check_prime_cutoff(const TestFunction& phi, double norm_cutoff) {
  if (phi.is_zero()) return;
  const auto [lo, hi] = phi.support();
  const double reach = std::max(std::fabs(lo), std::fabs(hi));
  if (!(std::log(norm_cutoff) >= reach)) {
    throw TruncationError("prime norm cutoff " + std::to_string(norm_cutoff) +
                          " is below e^{max|support|} = " + std::to_string(std::exp(reach)));
  }
}

double prime_tail_bound(const TestFunction& phi, const NumberFieldData& field, double norm_cutoff) {
  double total = 0.0;
  for (const auto& a : phi.atoms()) {
    if (a.weight != 0.0 && a.shape == TestFunction::Shape::Gaussian) {
      total += gaussian_prime_tail(a, norm_cutoff, field.degree());
    }
  }
  return total;
}

Distribution prime_distribution(const NumberFieldData& field, double norm_cutoff) {
  Distribution out;
  if (!(norm_cutoff >= 2.0)) return out;
  const auto bound = static_cast<std::int64_t>(std::min(std::floor(norm_cutoff), 9.0e15));
  for (const auto& ideal : field.prime_ideals(bound)) {
    const double log_norm = std::log(static_cast<double>(ideal.norm));
    const double weight = ideal.count * log_norm;
    std::int64_t power = ideal.norm;
    for (int k = 1;; ++k) {
      out.push_back(DistributionTerm::delta(weight, k * log_norm));
      out.push_back(DistributionTerm::delta(weight * std::pow(static_cast<double>(ideal.norm), -k),
                                            -k * log_norm));
      if (power > bound / ideal.norm) break;
      power *= ideal.norm;
    }
  }
  return out;
}

double weil_integrand(double t, double phi_t, int kappa, SignSide side) {
  if (side == SignSide::PositiveSupport) return phi_t / -std::expm1(kappa * t);
  return phi_t * std::exp(t) / -std::expm1(kappa * std::fabs(t));
}

}  // namespace

DistributionTerm DistributionTerm::exponential(double coefficient, Complex s) {
  DistributionTerm t;
  t.kind = Kind::Exponential;
  t.coefficient = coefficient;
  t.exponent = s;
  return t;
}

DistributionTerm DistributionTerm::delta(double coefficient, double location) {
  DistributionTerm t;
  t.kind = Kind::Delta;
  t.coefficient = coefficient;
  t.location = location;
  return t;
}

DistributionTerm DistributionTerm::weil(double coefficient, int kappa) {
  if (kappa != -1 && kappa != -2) throw DomainError("Weil term needs kappa in {-1, -2}");
  DistributionTerm t;
  t.kind = Kind::Weil;
  t.coefficient = coefficient;
  t.kappa = kappa;
  return t;
}

Complex pair(const Distribution& terms, const TestFunction& phi, const PrecisionConfig& cfg) {
  CompensatedComplexSum sum;
  if (phi.is_zero()) return {};
  for (const auto& term : terms) {
    if (term.coefficient == 0.0) continue;
    switch (term.kind) {
      case DistributionTerm::Kind::Exponential:
        sum += term.coefficient * transform(phi, term.exponent, cfg);
        break;
      case DistributionTerm::Kind::Delta:
        sum += term.coefficient * phi(term.location);
        break;
      case DistributionTerm::Kind::Weil:
        sum += term.coefficient * weil_term(phi, WeilTermParams{term.kappa}, cfg);
        break;
    }
  }
  return sum.value();
}

Distribution spectral_distribution(const ZeroList& zeros) {
  Distribution out;
  out.reserve(2 * zeros.ordinates.size() + 2);
  out.push_back(DistributionTerm::exponential(1.0, {0.0, 0.0}));
  out.push_back(DistributionTerm::exponential(1.0, {1.0, 0.0}));
  for (double gamma : zeros.ordinates) {
    out.push_back(DistributionTerm::exponential(-1.0, {0.5, gamma}));
    out.push_back(DistributionTerm::exponential(-1.0, {0.5, -gamma}));
  }
  return out;
}

Distribution geometric_distribution(const NumberFieldData& field, double norm_cutoff) {
  Distribution out;
  const double log_d = std::log(std::fabs(static_cast<double>(field.discriminant)));
  out.push_back(DistributionTerm::delta(-log_d, 0.0));
  Distribution primes = prime_distribution(field, norm_cutoff);
  out.insert(out.end(), primes.begin(), primes.end());
  if (field.r1 > 0) out.push_back(DistributionTerm::weil(field.r1, -2));
  if (field.r2 > 0) out.push_back(DistributionTerm::weil(field.r2, -1));
  return out;
}

SideValue spectral_side(const TestFunction& phi, const ZeroList& zeros, const NumberFieldData& field,
                        const PrecisionConfig& cfg, bool allow_empty) {
  zeros.validate();
  if (zeros.ordinates.empty() && !allow_empty) {
    throw DomainError("spectral side needs at least one zero (or allow_empty)");
  }
  if (!label_matches(zeros.field_label, field)) {
    throw DomainError("zeros file is for field '" + zeros.field_label + "', not " + field.label);
  }
  SideValue out;
  if (phi.is_zero()) return out;
  out.value = pair(spectral_distribution(zeros), phi, cfg);
  double height = zeros.ordinates.empty() ? 14.0 : zeros.ordinates.back();
  if (zeros.source == ZeroList::Source::Computed) height = std::max(height, zeros.t_max);
  out.tail_bound = zero_tail_bound(phi, height, field, cfg);
  return out;
}

PrimeSideValue prime_side(const TestFunction& phi, const NumberFieldData& field, double norm_cutoff,
                          const PrecisionConfig& cfg) {
  PrimeSideValue out;
  if (phi.is_zero()) return out;
  check_prime_cutoff(phi, norm_cutoff);
  const Distribution terms = prime_distribution(field, norm_cutoff);
  out.value = pair(terms, phi, cfg).real();
  out.terms = terms.size();
  out.tail_bound = prime_tail_bound(phi, field, norm_cutoff);
  return out;
}

double weil_term(const TestFunction& phi, WeilTermParams params, const PrecisionConfig& cfg) {
  if (params.kappa != -1 && params.kappa != -2) throw DomainError("Weil term needs kappa in {-1, -2}");
  if (phi.is_zero()) return 0.0;
  const SignSide side = phi.sign_side();
  if (side == SignSide::StraddlesZero) {
    throw UnsupportedPrincipalValueError(
        "W on a support containing 0 needs a principal-value convention; split phi by sign");
  }
  CompensatedSum sum;
  for (const auto& a : phi.atoms()) {
    if (a.weight == 0.0) continue;
    TestFunction single = a.shape == TestFunction::Shape::Bump
                              ? TestFunction::bump(a.center, a.width)
                              : TestFunction::gaussian(a.center, a.width, a.truncation);
    const std::function<double(double)> f = [&](double t) {
      return weil_integrand(t, single(t), params.kappa, side);
    };
    sum += a.weight * integrate_real(f, a.lo(), a.hi(), cfg);
  }
  return sum.value();
}

SideValue geometric_side(const TestFunction& phi, const NumberFieldData& field, double norm_cutoff,
                         const PrecisionConfig& cfg) {
  SideValue out;
  if (phi.is_zero()) return out;
  check_prime_cutoff(phi, norm_cutoff);
  out.value = pair(geometric_distribution(field, norm_cutoff), phi, cfg);
  out.tail_bound = prime_tail_bound(phi, field, norm_cutoff);
  return out;
}

double default_prime_cutoff(const TestFunction& phi) {
  if (phi.is_zero()) return 2.0;
  const auto [lo, hi] = phi.support();
  return std::max(2.0, std::ceil(std::exp(std::max(std::fabs(lo), std::fabs(hi)))));
}

ExplicitFormulaReport check_explicit_formula(const TestFunction& phi, const NumberFieldData& field,
                                             const ZeroList& zeros, double norm_cutoff,
                                             const PrecisionConfig& cfg, bool allow_empty_zeros) {
  ExplicitFormulaReport r;
  r.zeros_used = zeros.ordinates.size();
  r.zero_height = zeros.ordinates.empty() ? 0.0 : zeros.ordinates.back();
  if (zeros.source == ZeroList::Source::Computed) r.zero_height = std::max(r.zero_height, zeros.t_max);
  r.prime_cutoff = norm_cutoff;
  r.quadrature_tolerance = cfg.target_abs_error;
  if (phi.is_zero()) return r;

  const SideValue spectral = spectral_side(phi, zeros, field, cfg, allow_empty_zeros);
  const SideValue geometric = geometric_side(phi, field, norm_cutoff, cfg);
  r.spectral = spectral.value;
  r.geometric = geometric.value.real();
  r.residual = std::abs(spectral.value - geometric.value);
  r.zero_tail_bound = spectral.tail_bound;
  r.prime_tail_bound = geometric.tail_bound;
  r.prime_terms = prime_distribution(field, norm_cutoff).size();
  r.gaussian_window_leak = phi.gaussian_window_leak();
  return r;
}

}  // namespace zrl
