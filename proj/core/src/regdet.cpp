#include "zrl/regdet.hpp"

#include <cmath>

#include "zrl/error.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

bool is_integer(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

bool is_negative_real(Complex g) noexcept { return g.imag() == 0.0 && g.real() < 0.0; }

// Terms nu >= 0 of the half-line ladder for which
// Arg(gamma (z + nu)) != Arg(gamma) + Arg(z + nu). |Arg(z + nu)| is
// non-increasing in nu, so the set is an initial segment.
template <class Visit>
void for_each_nonadditive_term(Complex gamma, Complex z, Visit&& visit) {
  const double arg_gamma = std::arg(gamma);
  for (int nu = 0;; ++nu) {
    const Complex w = z + static_cast<double>(nu);
    const double arg_w = std::arg(w);
    if (std::fabs(arg_w) < kPi - std::fabs(arg_gamma)) break;
    const double sum = arg_gamma + arg_w;
    if (sum > -kPi && sum <= kPi) continue;
    visit(w);
  }
}

// zeta_gamma(s, z) = sum_{nu >= 0} (gamma (z + nu))^{-s}, principal powers.
Complex half_line_zeta(Complex gamma, Complex z, Complex s, const PrecisionConfig& cfg) {
  CompensatedComplexSum sum;
  sum += std::exp(-s * std::log(gamma)) * hurwitz_zeta(s, z, cfg);
  for_each_nonadditive_term(gamma, z, [&](Complex w) {
    sum += std::exp(-s * std::log(gamma * w)) - std::exp(-s * (std::log(gamma) + std::log(w)));
  });
  return sum.value();
}

Complex half_line_zeta_derivative_at_0(Complex gamma, Complex z, const PrecisionConfig& cfg) {
  CompensatedComplexSum sum;
  const Complex log_gamma_ = std::log(gamma);
  sum += -log_gamma_ * hurwitz_zeta(Complex{0.0, 0.0}, z, cfg);
  sum += hurwitz_zeta_s_derivative_at_0(z, cfg);
  for_each_nonadditive_term(gamma, z, [&](Complex w) {
    sum += -std::log(gamma * w) + log_gamma_ + std::log(w);
  });
  return sum.value();
}

}  // namespace

SpectralLadder SpectralLadder::finite_set(std::vector<Eigenvalue> eigenvalues) {
  for (const auto& e : eigenvalues) {
    if (e.multiplicity < 1) throw DomainError("eigenvalue multiplicities must be >= 1");
  }
  return SpectralLadder(Kind::FiniteSet, {}, {}, std::move(eigenvalues));
}

SpectralLadder SpectralLadder::half_line(Complex gamma, Complex z) {
  if (gamma == Complex{0.0, 0.0} || is_negative_real(gamma)) {
    throw DomainError("half-line ladder needs gamma != 0 and not a negative real number");
  }
  return SpectralLadder(Kind::HalfLine, gamma, z, {});
}

SpectralLadder SpectralLadder::bilateral(Complex gamma, Complex z) {
  if (gamma.imag() == 0.0) {
    throw DomainError("bilateral ladder needs Im gamma != 0 (gamma and -gamma off the negative axis)");
  }
  return SpectralLadder(Kind::Bilateral, gamma, z, {});
}

bool SpectralLadder::contains_zero() const noexcept {
  switch (kind_) {
    case Kind::FiniteSet:
      for (const auto& e : eigenvalues_) {
        if (e.value == Complex{0.0, 0.0}) return true;
      }
      return false;
    case Kind::HalfLine:
      return is_nonpositive_integer(z_);
    case Kind::Bilateral:
      return is_integer(z_);
  }
  return false;
}

SpectralZetaValue spectral_zeta(const SpectralLadder& ladder, Complex s,
                                const PrecisionConfig& cfg) {
  const bool has_zero = ladder.contains_zero();
  switch (ladder.kind()) {
    case SpectralLadder::Kind::FiniteSet: {
      CompensatedComplexSum sum;
      for (const auto& e : ladder.eigenvalues()) {
        if (e.value == Complex{0.0, 0.0}) continue;
        sum += static_cast<double>(e.multiplicity) * std::exp(-s * std::log(e.value));
      }
      return {sum.value(), has_zero};
    }
    case SpectralLadder::Kind::HalfLine: {
      if (!has_zero) return {half_line_zeta(ladder.gamma(), ladder.z(), s, cfg), false};
      // z = -n: the spectrum is gamma * {-n, ..., -1} plus 0 plus gamma * {1, 2, ...}.
      const Complex g = ladder.gamma();
      CompensatedComplexSum sum;
      for (double k = ladder.z().real(); k < 0.0; k += 1.0) sum += std::exp(-s * std::log(g * k));
      sum += half_line_zeta(g, Complex{1.0, 0.0}, s, cfg);
      return {sum.value(), true};
    }
    case SpectralLadder::Kind::Bilateral: {
      const Complex g = ladder.gamma();
      if (has_zero) {
        // Integer z: the nonzero spectrum is gamma * (Z \ {0}).
        const Complex one{1.0, 0.0};
        return {half_line_zeta(g, one, s, cfg) + half_line_zeta(-g, one, s, cfg), true};
      }
      const Complex z = ladder.z();
      const Complex value = half_line_zeta(g, z, s, cfg) + half_line_zeta(-g, -z, s, cfg) -
                            std::exp(-s * std::log(g * z));
      return {value, false};
    }
  }
  return {};
}

Complex spectral_zeta_derivative_at_0(const SpectralLadder& ladder, const PrecisionConfig& cfg) {
  if (ladder.contains_zero()) {
    throw DomainError("spectral zeta derivative requested for a spectrum containing 0");
  }
  switch (ladder.kind()) {
    case SpectralLadder::Kind::FiniteSet: {
      CompensatedComplexSum sum;
      for (const auto& e : ladder.eigenvalues()) {
        sum += -static_cast<double>(e.multiplicity) * std::log(e.value);
      }
      return sum.value();
    }
    case SpectralLadder::Kind::HalfLine:
      return half_line_zeta_derivative_at_0(ladder.gamma(), ladder.z(), cfg);
    case SpectralLadder::Kind::Bilateral: {
      const Complex g = ladder.gamma();
      const Complex z = ladder.z();
      return half_line_zeta_derivative_at_0(g, z, cfg) +
             half_line_zeta_derivative_at_0(-g, -z, cfg) + std::log(g * z);
    }
  }
  return {};
}

Complex regdet(const SpectralLadder& ladder, const PrecisionConfig& cfg) {
  (void)cfg;
  if (ladder.contains_zero()) return {0.0, 0.0};
  switch (ladder.kind()) {
    case SpectralLadder::Kind::FiniteSet: {
      Complex product{1.0, 0.0};
      for (const auto& e : ladder.eigenvalues()) {
        for (int k = 0; k < e.multiplicity; ++k) product *= e.value;
      }
      return product;
    }
    case SpectralLadder::Kind::HalfLine: {
      // gamma^{1/2 - z} (Gamma(z) / sqrt(2 pi))^{-1}
      const Complex z = ladder.z();
      const Complex power = std::exp((0.5 - z) * std::log(ladder.gamma()));
      return ensure_finite(power * std::sqrt(kTwoPi) / gamma_fn(z), "regdet");
    }
    case SpectralLadder::Kind::Bilateral: {
      const Complex i_two_pi_z = Complex{0.0, kTwoPi} * ladder.z();
      const Complex value =
          ladder.gamma().imag() > 0.0 ? 1.0 - std::exp(-i_two_pi_z) : 1.0 - std::exp(i_two_pi_z);
      return ensure_finite(value, "regdet");
    }
  }
  return {};
}

Complex regdet_numerical(const SpectralLadder& ladder, const PrecisionConfig& cfg) {
  if (ladder.contains_zero()) return {0.0, 0.0};
  return ensure_finite(std::exp(-spectral_zeta_derivative_at_0(ladder, cfg)), "regdet_numerical");
}

PlaceSpec PlaceSpec::finite(std::int64_t norm) {
  if (norm < 2) throw DomainError("finite place norm must be >= 2");
  return {Kind::Finite, norm};
}

SpectralLadder euler_factor_ladder(const PlaceSpec& place, Complex s) {
  switch (place.kind) {
    case PlaceSpec::Kind::Finite: {
      if (place.norm < 2) throw DomainError("finite place norm must be >= 2");
      // (1/2pi)(s - 2 pi i nu / L) = (i / L)(s L / (2 pi i) - nu), nu in Z
      const double log_norm = std::log(static_cast<double>(place.norm));
      const Complex gamma{0.0, 1.0 / log_norm};
      const Complex z = s * log_norm / Complex{0.0, kTwoPi};
      return SpectralLadder::bilateral(gamma, z);
    }
    case PlaceSpec::Kind::RealArchimedean:
      // (1/2pi)(s + 2 nu) = (1/pi)(s/2 + nu)
      return SpectralLadder::half_line(Complex{1.0 / kPi, 0.0}, 0.5 * s);
    case PlaceSpec::Kind::ComplexArchimedean:
      // (1/2pi)(s + nu)
      return SpectralLadder::half_line(Complex{1.0 / kTwoPi, 0.0}, s);
  }
  throw DomainError("unknown place kind");
}

Complex euler_factor_via_regdet(const PlaceSpec& place, Complex s, const PrecisionConfig& cfg) {
  return regdet(euler_factor_ladder(place, s), cfg);
}

Complex euler_factor_direct(const PlaceSpec& place, Complex s) {
  switch (place.kind) {
    case PlaceSpec::Kind::Finite:
      if (place.norm < 2) throw DomainError("finite place norm must be >= 2");
      return ensure_finite(1.0 - std::exp(-s * std::log(static_cast<double>(place.norm))),
                           "euler_factor_direct");
    case PlaceSpec::Kind::RealArchimedean:
      return ensure_finite(
          std::sqrt(2.0) * std::exp(0.5 * s * std::log(kPi)) / gamma_fn(0.5 * s),
          "euler_factor_direct");
    case PlaceSpec::Kind::ComplexArchimedean:
      return ensure_finite(std::exp(s * std::log(kTwoPi)) / gamma_fn(s), "euler_factor_direct");
  }
  throw DomainError("unknown place kind");
}

}  // namespace zrl
