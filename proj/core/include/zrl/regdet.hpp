#pragma once

#include <cstdint>
#include <vector>

#include "zrl/precision.hpp"
#include "zrl/special_functions.hpp"

namespace zrl {

struct Eigenvalue {
  Complex value;
  int multiplicity = 1;
};

/// Symbolic description of an operator spectrum.
///
///   finite_set  the listed eigenvalues with multiplicities
///   half_line   { gamma (z + nu) : nu = 0, 1, 2, ... }
///   bilateral   { gamma (z + nu) : nu in Z }
///
/// Powers alpha^{-s} always use the principal argument in (-pi, pi].
class SpectralLadder {
 public:
  enum class Kind { FiniteSet, HalfLine, Bilateral };

  static SpectralLadder finite_set(std::vector<Eigenvalue> eigenvalues);
  /// Throws DomainError if gamma is zero or a negative real number.
  static SpectralLadder half_line(Complex gamma, Complex z);
  /// Throws DomainError unless Im gamma != 0, so that neither gamma nor -gamma
  /// is a negative real number.
  static SpectralLadder bilateral(Complex gamma, Complex z);

  Kind kind() const noexcept { return kind_; }
  Complex gamma() const noexcept { return gamma_; }
  Complex z() const noexcept { return z_; }
  const std::vector<Eigenvalue>& eigenvalues() const noexcept { return eigenvalues_; }

  bool contains_zero() const noexcept;

 private:
  SpectralLadder(Kind kind, Complex gamma, Complex z, std::vector<Eigenvalue> eigenvalues)
      : kind_(kind), gamma_(gamma), z_(z), eigenvalues_(std::move(eigenvalues)) {}

  Kind kind_;
  Complex gamma_;
  Complex z_;
  std::vector<Eigenvalue> eigenvalues_;
};

/// Value of the spectral zeta function; `zero_eigenvalue` is set when 0 is in
/// the spectrum, in which case the zero eigenvalue is omitted from the sum and
/// the regularized determinant is 0.
struct SpectralZetaValue {
  Complex value;
  bool zero_eigenvalue = false;
};

/// zeta_Theta(s) = sum over nonzero eigenvalues of alpha^{-s}.
///
/// Half-line ladders reduce to gamma^{-s} zeta(s, z) plus the finitely many
/// terms whose argument is not additive; bilateral ladders use
/// zeta_gamma(s, z) + zeta_{-gamma}(s, -z) - (gamma z)^{-s}.
SpectralZetaValue spectral_zeta(const SpectralLadder& ladder, Complex s,
                                const PrecisionConfig& cfg = {});

/// d/ds zeta_Theta(s) at s = 0 along the numerical continuation
/// (Hurwitz series and its term-wise derivative). Requires a spectrum without 0.
Complex spectral_zeta_derivative_at_0(const SpectralLadder& ladder,
                                      const PrecisionConfig& cfg = {});

/// Zeta-regularized determinant exp(-zeta_Theta'(0)), or 0 when 0 is in the
/// spectrum. Half-line and bilateral ladders use their closed forms; finite
/// sets use the ordinary product.
Complex regdet(const SpectralLadder& ladder, const PrecisionConfig& cfg = {});

/// exp(-zeta_Theta'(0)) computed from spectral_zeta_derivative_at_0. Returns 0
/// for spectra containing 0.
Complex regdet_numerical(const SpectralLadder& ladder, const PrecisionConfig& cfg = {});

/// A place of a number field.
struct PlaceSpec {
  enum class Kind { Finite, RealArchimedean, ComplexArchimedean };
  Kind kind = Kind::Finite;
  std::int64_t norm = 0;  // only for Finite, >= 2

  static PlaceSpec finite(std::int64_t norm);
  static PlaceSpec real() { return {Kind::RealArchimedean, 0}; }
  static PlaceSpec complex() { return {Kind::ComplexArchimedean, 0}; }
};

/// Ladder of (1 / 2 pi)(s - Theta) on the space attached to the place.
SpectralLadder euler_factor_ladder(const PlaceSpec& place, Complex s);

/// det_inf((1 / 2 pi)(s - Theta)); equals zeta_p(s)^{-1}. Returns 0 at poles
/// of zeta_p.
Complex euler_factor_via_regdet(const PlaceSpec& place, Complex s,
                                const PrecisionConfig& cfg = {});

/// zeta_p(s)^{-1} from the defining formulas:
///   finite   1 - N^{-s}
///   real     sqrt(2) pi^{s/2} / Gamma(s/2)
///   complex  (2 pi)^s / Gamma(s)
/// Throws PoleError where the Gamma factor has a pole.
Complex euler_factor_direct(const PlaceSpec& place, Complex s);

}  // namespace zrl
