#pragma once

#include <complex>

#include "zrl/precision.hpp"

namespace zrl {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
// log sqrt(2 pi)
inline constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640561764;

/// True when z lies exactly on {0, -1, -2, ...}.
bool is_nonpositive_integer(Complex z) noexcept;

/// sin(pi z) with the real part reduced modulo 2 before scaling by pi.
Complex sin_pi(Complex z);

/// Throws DomainError if either component is NaN or infinite.
Complex ensure_finite(Complex z, const char* what);

/// Gamma function via a g = 7, n = 9 Lanczos sum, with reflection for Re z < 1/2.
/// Throws PoleError on non-positive integers.
Complex gamma_fn(Complex z);

/// Continuous branch of log Gamma on the plane cut along (-inf, 0].
///
/// On Re z >= 1/2 this is the analytic continuation of the real logarithm of
/// Gamma from the positive axis. Further left it is extended with
/// log Gamma(z) = log Gamma(z + K) - sum_{nu < K} Log(z + nu) using principal
/// logarithms, which is the branch produced by differentiating the Hurwitz
/// series term by term.
Complex log_gamma(Complex z);

/// Hurwitz zeta(s, z) = sum_{nu >= 0} (z + nu)^{-s} (principal powers),
/// continued to s != 1 with Euler-Maclaurin summation.
///
/// Throws PoleError for s = 1 and DomainError for z in {0, -1, -2, ...}.
Complex hurwitz_zeta(Complex s, Complex z, const PrecisionConfig& cfg = {});

/// d/ds zeta(s, z) at s = 0, from the term-wise derivative of the
/// Euler-Maclaurin expansion. Equals log_gamma(z) - log sqrt(2 pi) exactly in
/// branch (Lerch).
Complex hurwitz_zeta_s_derivative_at_0(Complex z, const PrecisionConfig& cfg = {});

/// Riemann zeta on the complex plane (s != 1) through hurwitz_zeta(s, 1).
Complex riemann_zeta(Complex s, const PrecisionConfig& cfg = {});

/// Number of direct-sum terms used by hurwitz_zeta before the Euler-Maclaurin
/// tail, exposed for reporting and tests.
int hurwitz_series_cutoff(Complex s, Complex z, const PrecisionConfig& cfg);

}  // namespace zrl
