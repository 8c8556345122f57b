#pragma once

#include <utility>
#include <vector>

#include "zrl/precision.hpp"
#include "zrl/special_functions.hpp"

namespace zrl {

enum class SignSide { PositiveSupport, NegativeSupport, StraddlesZero };

const char* to_string(SignSide side) noexcept;

/// Real test function phi, a finite linear combination of
///
///   bump(c, w)        exp(-1 / (1 - u^2)), u = (t - c) / w, on (c - w, c + w)
///   gaussian(c, s, m) exp(-(t - c)^2 / (2 s^2)), treated as supported on the
///                     window (c - m s, c + m s)
///
/// Gaussians are evaluated without truncation; the mass outside the window is
/// reported by gaussian_window_leak() wherever the window is used as support.
class TestFunction {
 public:
  enum class Shape { Bump, Gaussian };

  struct Atom {
    Shape shape;
    double center;
    double width;       // bump half-width or Gaussian sigma
    double truncation;  // Gaussian window in units of sigma (unused for bumps)
    double weight;

    double lo() const noexcept;
    double hi() const noexcept;
  };

  TestFunction() = default;

  static TestFunction bump(double center, double halfwidth);
  static TestFunction gaussian(double center, double sigma, double truncation = 6.0);

  double operator()(double t) const;

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept;
  bool has_gaussian() const noexcept;

  /// Hull of the supports (windows for Gaussians) of the nonzero atoms.
  /// Requires !is_zero().
  std::pair<double, double> support() const;
  SignSide sign_side() const;

  /// Upper bound for the L1 mass of the Gaussian atoms outside their windows.
  double gaussian_window_leak() const;

  /// phi(-t).
  TestFunction reflected() const;

  TestFunction& operator+=(const TestFunction& other);
  TestFunction& operator*=(double factor);
  friend TestFunction operator+(TestFunction a, const TestFunction& b) { return a += b; }
  friend TestFunction operator*(double factor, TestFunction f) { return f *= factor; }

 private:
  std::vector<Atom> atoms_;
};

/// Phi(s) = integral of phi(t) e^{ts} dt. Gaussian atoms use the closed form
/// sqrt(2 pi) sigma e^{sc + s^2 sigma^2 / 2}; bumps use adaptive quadrature over
/// their support.
Complex transform(const TestFunction& phi, Complex s, const PrecisionConfig& cfg = {});

/// Phi(s) by quadrature of every atom over its support or window. For
/// Gaussians this differs from transform() by at most the window leak times
/// max e^{t Re s} outside the window.
Complex transform_by_quadrature(const TestFunction& phi, Complex s, const PrecisionConfig& cfg = {});

/// L1 norm of the k-th derivative of psi(t) = phi(t) e^{shift t} for the bump
/// atoms (Taylor-jet differentiation, quadrature over the support). Gaussian
/// atoms are skipped. Requires 0 <= k <= 12.
double bump_derivative_l1(const TestFunction& phi, int k, double shift,
                          const PrecisionConfig& cfg = {});

}  // namespace zrl
