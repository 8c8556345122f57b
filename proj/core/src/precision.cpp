#include "zrl/precision.hpp"

#include <algorithm>
#include <cmath>

#include "zrl/error.hpp"

namespace zrl {

PrecisionConfig PrecisionConfig::for_tolerance(double target_abs_error) {
  if (!(target_abs_error > 0.0) || !std::isfinite(target_abs_error)) {
    throw DomainError("target_abs_error must be a positive finite number");
  }
  // Cutoffs scale with the number of requested digits; 1e-12 reproduces the defaults.
  const double digits = std::clamp(-std::log10(target_abs_error), 1.0, 16.0);
  PrecisionConfig cfg;
  cfg.target_abs_error = target_abs_error;
  cfg.series_cutoff = std::max(10, static_cast<int>(std::ceil(50.0 * digits / 12.0)));
  cfg.euler_maclaurin_terms = std::clamp(static_cast<int>(std::ceil(8.0 * digits / 12.0)), 2, 15);
  cfg.quadrature_max_depth = std::max(4, static_cast<int>(std::ceil(30.0 * digits / 12.0)));
  return cfg;
}

void PrecisionConfig::validate() const {
  if (!(target_abs_error > 0.0)) throw DomainError("target_abs_error must be > 0");
  if (euler_maclaurin_terms < 2) throw DomainError("euler_maclaurin_terms must be >= 2");
  if (series_cutoff < 10) throw DomainError("series_cutoff must be >= 10");
  if (quadrature_max_depth < 4) throw DomainError("quadrature_max_depth must be >= 4");
}

}  // namespace zrl
