#include "zrl/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zrl/error.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

// Lanczos coefficients for g = 7, n = 9. Relative accuracy is about 1e-15 on
// Re z >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// B_{2j} for j = 1..15.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

constexpr int kMaxEulerMaclaurinTerms = static_cast<int>(kBernoulliEven.size());

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Complex lanczos_sum(Complex w) {
  // w = z - 1
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (w + static_cast<double>(i));
  }
  return x;
}

// log Gamma(z) for Re z >= 1/2 in the continuous branch.
Complex log_gamma_right(Complex z) {
  const Complex w = z - 1.0;
  const Complex t = w + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (w + 0.5) * std::log(t) - t + std::log(lanczos_sum(w));
}

Complex gamma_right(Complex z) {
  const Complex w = z - 1.0;
  const Complex t = w + kLanczosG + 0.5;
  return std::sqrt(kTwoPi) * std::exp((w + 0.5) * std::log(t) - t) * lanczos_sum(w);
}

int em_terms(const PrecisionConfig& cfg) {
  return std::clamp(cfg.euler_maclaurin_terms, 2, kMaxEulerMaclaurinTerms);
}

void check_hurwitz_z(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw DomainError("Hurwitz zeta undefined for z in {0, -1, -2, ...}");
  }
}

}  // namespace

bool is_nonpositive_integer(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex sin_pi(Complex z) {
  // Reduce Re z into [-1, 1) so pi * Re z keeps full relative accuracy near integers.
  const double shift = 2.0 * std::floor((z.real() + 1.0) / 2.0);
  const Complex r{z.real() - shift, z.imag()};
  return std::sin(kPi * r);
}

Complex ensure_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": result is not finite");
  }
  return z;
}

Complex gamma_fn(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("Gamma has a pole at non-positive integers");
  }
  if (z.real() < 0.5) {
    return ensure_finite(kPi / (sin_pi(z) * gamma_right(1.0 - z)), "gamma_fn");
  }
  return ensure_finite(gamma_right(z), "gamma_fn");
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log Gamma has a pole at non-positive integers");
  }
  if (z.real() >= 0.5) return ensure_finite(log_gamma_right(z), "log_gamma");
  const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  CompensatedComplexSum logs;
  for (int nu = 0; nu < shift; ++nu) logs += std::log(z + static_cast<double>(nu));
  return ensure_finite(log_gamma_right(z + static_cast<double>(shift)) - logs.value(),
                       "log_gamma");
}

int hurwitz_series_cutoff(Complex s, Complex z, const PrecisionConfig& cfg) {
  int n;
  if (s.real() >= 0.0) {
    n = std::max(cfg.series_cutoff, static_cast<int>(std::ceil(10.0 * std::fabs(s.imag()))));
  } else {
    // Left of the imaginary axis the tail terms grow like N^{1 - Re s}, so keep
    // N just large enough for the Bernoulli terms to decrease.
    const double reach = std::abs(s) + 2.0 * em_terms(cfg);
    n = std::max(10, static_cast<int>(std::ceil(3.0 * reach / kTwoPi)));
  }
  if (z.real() < 0.0) n += static_cast<int>(std::ceil(-z.real()));
  return n;
}

Complex hurwitz_zeta(Complex s, Complex z, const PrecisionConfig& cfg) {
  if (s == Complex{1.0, 0.0}) throw PoleError("Hurwitz zeta has a pole at s = 1");
  check_hurwitz_z(z);

  const int n = hurwitz_series_cutoff(s, z, cfg);
  CompensatedComplexSum sum;
  for (int nu = 0; nu < n; ++nu) {
    sum += std::exp(-s * std::log(z + static_cast<double>(nu)));
  }

  const Complex w = z + static_cast<double>(n);
  const Complex log_w = std::log(w);
  const Complex w_pow = std::exp(-s * log_w);  // w^{-s}
  sum += w * w_pow / (s - 1.0);
  sum += 0.5 * w_pow;

  const Complex inv_w2 = 1.0 / (w * w);
  Complex power = w_pow / w;  // w^{-s-1}
  Complex rising = s;         // s (s+1) ... (s + 2j - 2)
  const int m = em_terms(cfg);
  for (int j = 1; j <= m; ++j) {
    if (j > 1) {
      rising *= (s + (2.0 * j - 3.0)) * (s + (2.0 * j - 2.0));
      power *= inv_w2;
    }
    sum += kBernoulliEven[j - 1] / factorial(2 * j) * rising * power;
  }
  return ensure_finite(sum.value(), "hurwitz_zeta");
}

Complex hurwitz_zeta_s_derivative_at_0(Complex z, const PrecisionConfig& cfg) {
  check_hurwitz_z(z);
  const int n = hurwitz_series_cutoff(Complex{0.0, 0.0}, z, cfg);
  CompensatedComplexSum sum;
  for (int nu = 0; nu < n; ++nu) sum += -std::log(z + static_cast<double>(nu));

  const Complex w = z + static_cast<double>(n);
  const Complex log_w = std::log(w);
  sum += (w - 0.5) * log_w;
  sum += -w;

  const Complex inv_w2 = 1.0 / (w * w);
  Complex power = 1.0 / w;  // w^{1-2j}
  const int m = em_terms(cfg);
  for (int j = 1; j <= m; ++j) {
    if (j > 1) power *= inv_w2;
    sum += kBernoulliEven[j - 1] / (2.0 * j * (2.0 * j - 1.0)) * power;
  }
  return ensure_finite(sum.value(), "hurwitz_zeta_s_derivative_at_0");
}

Complex riemann_zeta(Complex s, const PrecisionConfig& cfg) {
  return hurwitz_zeta(s, Complex{1.0, 0.0}, cfg);
}

}  // namespace zrl
