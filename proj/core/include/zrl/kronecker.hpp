#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zrl/special_functions.hpp"

namespace zrl {

/// Slope alpha of the linear foliation of T^2 by the leaves t -> (x + t alpha, t).
struct SlopeParam {
  double value = 0.0;
  std::string name;

  static SlopeParam golden();  // (1 + sqrt 5) / 2
  static SlopeParam sqrt2();
  /// 2^{-1!} + 2^{-2!} + 2^{-3!} + 2^{-4!}: Liouville-type and exactly representable.
  static SlopeParam liouville_like();
  static SlopeParam from_value(double value);
};

/// Trigonometric polynomial sum c_{mn} e^{2 pi i (m x + n y)} with |m|, |n| <= M.
class FourierFunction2D {
 public:
  explicit FourierFunction2D(int modes = 0);

  static FourierFunction2D constant(Complex c, int modes);

  int modes() const noexcept { return modes_; }
  Complex& at(int m, int n);
  const Complex& at(int m, int n) const;

  /// c_{-m,-n} = conj(c_{mn}) up to tol * max |c|.
  bool is_hermitian(double tol = 1e-12) const;
  double l2_norm() const;

  friend FourierFunction2D operator-(const FourierFunction2D& a, const FourierFunction2D& b);

 private:
  std::size_t index(int m, int n) const;

  int modes_;
  std::vector<Complex> coeffs_;
};

/// Coefficient file: lines "m n re im"; '#' comments. The mode cutoff is the
/// largest |m| or |n| present; missing modes are 0.
FourierFunction2D parse_fourier(std::istream& in);
FourierFunction2D load_fourier(const std::filesystem::path& path);

/// Derivative along the leaves: c_{mn} -> 2 pi i (m alpha + n) c_{mn}.
FourierFunction2D leafwise_derivative(const FourierFunction2D& f, const SlopeParam& alpha);

struct CohomologicalSolution {
  FourierFunction2D h;
  Complex obstruction{};                 // g_{00}
  double smallest_divisor = 0.0;         // min |m alpha + n| over active modes
  bool small_divisor_flag = false;
  std::vector<std::pair<int, int>> offending_modes;

  /// Throws SmallDivisorError listing offending_modes when the flag is set.
  void require_no_small_divisors() const;
};

/// Solves leafwise_derivative(h) = g - g_{00}: h_{mn} = g_{mn} / (2 pi i (m alpha + n)).
/// Active modes with |m alpha + n| < min_divisor are flagged (advisory; the
/// truncated solve is still returned). Throws DomainError if some active
/// divisor is exactly zero.
CohomologicalSolution solve_cohomological(const FourierFunction2D& g, const SlopeParam& alpha,
                                          double min_divisor = 1e-12);

/// Class of g in reduced leafwise H^1, i.e. Re g_{00}. Throws DomainError if
/// g is not Hermitian (not real valued).
double harmonic_projection(const FourierFunction2D& g);

struct DivisorMinimum {
  double value = 0.0;  // min |m alpha + n| over 0 < max(|m|, |n|) <= M
  int m = 0;
  int n = 0;
};

DivisorMinimum min_divisor(const SlopeParam& alpha, int modes);

struct DiophantineRow {
  int modes = 0;
  DivisorMinimum minimum;
  double scaled_minimum = 0.0;  // M * min, bounded below for badly approximable alpha
  double amplification = 0.0;   // ||h|| / ||g|| for g with all coefficients 1
};

struct DiophantineReport {
  std::vector<DiophantineRow> rows;  // M' = 1, 2, 4, ... and M
  double fitted_constant = 0.0;      // min over rows with M' >= 8 of M' * min
};

DiophantineReport diophantine_report(const SlopeParam& alpha, int modes);

}  // namespace zrl
