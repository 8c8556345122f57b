#include "zrl/test_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "zrl/error.hpp"
#include "zrl/quadrature.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

constexpr int kMaxJetOrder = 12;
using Jet = std::array<double, kMaxJetOrder + 1>;

Jet jet_reciprocal(const Jet& q, int order) {
  Jet r{};
  r[0] = 1.0 / q[0];
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += q[j] * r[n - j];
    r[n] = -acc * r[0];
  }
  return r;
}

Jet jet_exp(const Jet& h, int order) {
  Jet g{};
  g[0] = std::exp(h[0]);
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += k * h[k] * g[n - k];
    g[n] = acc / n;
  }
  return g;
}

// k-th derivative of weight * exp(-1 / (1 - u^2)) * exp(shift t) at t.
double bump_derivative(const TestFunction::Atom& a, int k, double shift, double t) {
  const double u0 = (t - a.center) / a.width;
  const double q0 = 1.0 - u0 * u0;
  if (q0 <= 0.0) return 0.0;
  const double h0 = -1.0 / q0 + shift * t;
  if (h0 < -700.0) return 0.0;
  Jet q{};
  q[0] = q0;
  q[1] = -2.0 * u0 / a.width;
  q[2] = -1.0 / (a.width * a.width);
  Jet h = jet_reciprocal(q, k);
  for (auto& c : h) c = -c;
  h[0] += shift * t;
  h[1] += shift;
  const Jet g = jet_exp(h, k);
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return a.weight * factorial * g[k];
}

double atom_value(const TestFunction::Atom& a, double t) {
  if (a.weight == 0.0) return 0.0;
  if (a.shape == TestFunction::Shape::Bump) {
    const double u = (t - a.center) / a.width;
    const double q = 1.0 - u * u;
    if (q <= 0.0) return 0.0;
    return a.weight * std::exp(-1.0 / q);
  }
  const double u = (t - a.center) / a.width;
  return a.weight * std::exp(-0.5 * u * u);
}

Complex quadrature_transform(const TestFunction::Atom& a, Complex s, const PrecisionConfig& cfg) {
  const std::function<Complex(double)> f = [&](double t) { return atom_value(a, t) * std::exp(t * s); };
  return integrate_complex(f, a.lo(), a.hi(), cfg);
}

}  // namespace

const char* to_string(SignSide side) noexcept {
  switch (side) {
    case SignSide::PositiveSupport:
      return "positive_support";
    case SignSide::NegativeSupport:
      return "negative_support";
    case SignSide::StraddlesZero:
      return "straddles_zero";
  }
  return "unknown";
}

double TestFunction::Atom::lo() const noexcept {
  return shape == Shape::Bump ? center - width : center - truncation * width;
}

double TestFunction::Atom::hi() const noexcept {
  return shape == Shape::Bump ? center + width : center + truncation * width;
}

TestFunction TestFunction::bump(double center, double halfwidth) {
  if (!(halfwidth > 0.0) || !std::isfinite(center)) {
    throw DomainError("bump needs a finite centre and halfwidth > 0");
  }
  TestFunction f;
  f.atoms_.push_back({Shape::Bump, center, halfwidth, 1.0, 1.0});
  return f;
}

TestFunction TestFunction::gaussian(double center, double sigma, double truncation) {
  if (!(sigma > 0.0) || !std::isfinite(center)) {
    throw DomainError("gaussian needs a finite centre and sigma > 0");
  }
  if (!(truncation >= 6.0)) throw DomainError("gaussian truncation must be >= 6");
  TestFunction f;
  f.atoms_.push_back({Shape::Gaussian, center, sigma, truncation, 1.0});
  return f;
}

double TestFunction::operator()(double t) const {
  CompensatedSum sum;
  for (const auto& a : atoms_) sum += atom_value(a, t);
  return sum.value();
}

bool TestFunction::is_zero() const noexcept {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.weight == 0.0; });
}

bool TestFunction::has_gaussian() const noexcept {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const Atom& a) {
    return a.weight != 0.0 && a.shape == Shape::Gaussian;
  });
}

std::pair<double, double> TestFunction::support() const {
  if (is_zero()) throw DomainError("the zero test function has empty support");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& a : atoms_) {
    if (a.weight == 0.0) continue;
    lo = std::min(lo, a.lo());
    hi = std::max(hi, a.hi());
  }
  return {lo, hi};
}

SignSide TestFunction::sign_side() const {
  const auto [lo, hi] = support();
  if (lo >= 0.0) return SignSide::PositiveSupport;
  if (hi <= 0.0) return SignSide::NegativeSupport;
  return SignSide::StraddlesZero;
}

double TestFunction::gaussian_window_leak() const {
  double leak = 0.0;
  for (const auto& a : atoms_) {
    if (a.weight == 0.0 || a.shape != Shape::Gaussian) continue;
    leak += std::fabs(a.weight) * std::sqrt(kTwoPi) * a.width *
            std::erfc(a.truncation / std::sqrt(2.0));
  }
  return leak;
}

TestFunction TestFunction::reflected() const {
  TestFunction f = *this;
  for (auto& a : f.atoms_) a.center = -a.center;
  return f;
}

TestFunction& TestFunction::operator+=(const TestFunction& other) {
  atoms_.insert(atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  return *this;
}

TestFunction& TestFunction::operator*=(double factor) {
  for (auto& a : atoms_) a.weight *= factor;
  return *this;
}

Complex transform(const TestFunction& phi, Complex s, const PrecisionConfig& cfg) {
  CompensatedComplexSum sum;
  for (const auto& a : phi.atoms()) {
    if (a.weight == 0.0) continue;
    if (a.shape == TestFunction::Shape::Gaussian) {
      const double sigma = a.width;
      sum += a.weight * std::sqrt(kTwoPi) * sigma *
             std::exp(s * a.center + 0.5 * s * s * sigma * sigma);
    } else {
      sum += quadrature_transform(a, s, cfg);
    }
  }
  return ensure_finite(sum.value(), "transform");
}

Complex transform_by_quadrature(const TestFunction& phi, Complex s, const PrecisionConfig& cfg) {
  CompensatedComplexSum sum;
  for (const auto& a : phi.atoms()) {
    if (a.weight == 0.0) continue;
    sum += quadrature_transform(a, s, cfg);
  }
  return ensure_finite(sum.value(), "transform_by_quadrature");
}

double bump_derivative_l1(const TestFunction& phi, int k, double shift, const PrecisionConfig& cfg) {
  if (k < 0 || k > kMaxJetOrder) throw DomainError("derivative order must be in [0, 12]");
  (void)cfg;
  // |psi^{(k)}| has kinks wherever the derivative changes sign, which defeats
  // adaptive refinement; a fixed composite rule is ample for a norm that only
  // feeds tail estimates.
  constexpr int kPanels = 512;
  CompensatedSum total;
  for (const auto& a : phi.atoms()) {
    if (a.weight == 0.0 || a.shape != TestFunction::Shape::Bump) continue;
    const std::function<double(double)> f = [&](double t) {
      return std::fabs(bump_derivative(a, k, shift, t));
    };
    const double h = (a.hi() - a.lo()) / kPanels;
    for (int i = 0; i < kPanels; ++i) {
      total += detail::gauss_legendre<double>(f, a.lo() + i * h, a.lo() + (i + 1) * h);
    }
  }
  return total.value();
}

}  // namespace zrl
