#pragma once

namespace zrl {

/// Accuracy knobs shared by every numerical routine.
///
/// The defaults target an absolute error of 1e-12. `for_tolerance` derives the
/// remaining cutoffs from a requested error so that a smaller error never
/// yields smaller cutoffs.
struct PrecisionConfig {
  double target_abs_error = 1e-12;
  int euler_maclaurin_terms = 8;
  int series_cutoff = 50;
  int quadrature_max_depth = 30;

  static PrecisionConfig for_tolerance(double target_abs_error);

  /// Throws DomainError when a field is outside its documented range.
  void validate() const;
};

}  // namespace zrl
