#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>

#include "zrl/error.hpp"
#include "zrl/precision.hpp"

namespace zrl {

namespace detail {

struct GaussLegendreRule {
  std::span<const double> nodes;    // on [-1, 1], positive half only
  std::span<const double> weights;  // matching weights
};

/// 15-point rule (7 symmetric pairs plus the centre node stored first).
const GaussLegendreRule& gauss_legendre_15();

template <class T>
T gauss_legendre(const std::function<T(double)>& f, double a, double b) {
  const auto& rule = gauss_legendre_15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T acc = rule.weights[0] * f(mid);
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
    const double dx = half * rule.nodes[i];
    acc += rule.weights[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * acc;
}

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct AdaptiveState {
  const std::function<T(double)>& f;
  int max_depth;
  bool exhausted = false;
};

template <class T>
T adaptive(AdaptiveState<T>& st, double a, double b, T whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const T left = gauss_legendre<T>(st.f, a, mid);
  const T right = gauss_legendre<T>(st.f, mid, b);
  const T refined = left + right;
  const double err = magnitude(refined - whole);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * magnitude(refined);
  if (err <= std::max(tol, floor)) return refined;
  if (depth >= st.max_depth) {
    st.exhausted = true;
    return refined;
  }
  return adaptive(st, a, mid, left, 0.5 * tol, depth + 1) +
         adaptive(st, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Legendre quadrature of f over [a, b].
///
/// Each panel is compared against its two halves; panels whose difference
/// exceeds the local share of cfg.target_abs_error are bisected, at most
/// cfg.quadrature_max_depth times. When the depth runs out the refined sum is
/// still computed everywhere and returned inside the ConvergenceError.
template <class T>
T integrate(const std::function<T(double)>& f, double a, double b,
            const PrecisionConfig& cfg = {}) {
  if (!(a < b)) throw DomainError("integrate: requires a < b");
  detail::AdaptiveState<T> st{f, cfg.quadrature_max_depth};
  const T whole = detail::gauss_legendre<T>(f, a, b);
  const T result = detail::adaptive(st, a, b, whole, cfg.target_abs_error, 0);
  if (st.exhausted) {
    throw ConvergenceError("integrate: quadrature depth exhausted", std::complex<double>(result));
  }
  return result;
}

inline double integrate_real(const std::function<double(double)>& f, double a, double b,
                             const PrecisionConfig& cfg = {}) {
  return integrate<double>(f, a, b, cfg);
}

inline std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const PrecisionConfig& cfg = {}) {
  return integrate<std::complex<double>>(f, a, b, cfg);
}

}  // namespace zrl
