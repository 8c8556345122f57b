#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "zrl/precision.hpp"

namespace zrl {

/// Ordinates gamma_j > 0 of nontrivial zeros 1/2 + i gamma_j, strictly ascending.
struct ZeroList {
  enum class Source { Computed, File };

  std::vector<double> ordinates;
  Source source = Source::Computed;
  double t_max = 0.0;       // Computed: search height
  std::string path;         // File: origin
  std::string field_label;  // File: value of the optional "# field:" header

  /// Throws OrderError unless ordinates are positive and strictly ascending.
  void validate() const;
};

/// Asymptotic Riemann-Siegel theta function. Throws DomainError for t < 10.
double riemann_siegel_theta(double t);

/// Smooth zero-counting estimate theta(t) / pi + 1.
double zero_count_estimate(double t);

/// Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it), real valued.
///
/// Below kHardyZSwitchHeight it is the real part of e^{i theta} times an
/// Euler-Maclaurin evaluation of zeta; above, the Riemann-Siegel main sum with
/// the correction terms C_0 .. C_4. Throws DomainError for t < 10.
double hardy_z(double t, const PrecisionConfig& cfg = {});

/// Riemann-Siegel main sum plus remainder terms C_0 .. C_{order - 1}, valid
/// for any t >= 10 but only accurate for large t. order is clamped to [0, 5].
double hardy_z_riemann_siegel(double t, int order = 5);

inline constexpr double kHardyZSwitchHeight = 200.0;

struct ZeroSearchOptions {
  int threads = 1;  // worker threads for the sign scan; output does not depend on it
};

/// All zero ordinates in (10, t_max], by a sign-change scan of Z (step 0.05
/// below t = 1000, 0.02 above) followed by bisection to 1e-9.
///
/// Requires 14 <= t_max <= 1e4. Throws MissedZeroError when the count up to
/// a checkpoint deviates from zero_count_estimate by more than 2.
ZeroList find_zeros(double t_max, const PrecisionConfig& cfg = {},
                    const ZeroSearchOptions& options = {});

/// Zeros file: UTF-8 text, one ordinate per line; blank lines and '#'
/// comments are skipped; an optional "# field: <label>" header names the field.
/// Throws ParseError (with line number) or OrderError.
ZeroList parse_zeros(std::istream& in, const std::string& origin = {});
ZeroList load_zeros(const std::filesystem::path& path);

/// Writes the shortest round-trip decimal of each ordinate, padded to at least
/// 9 fractional digits, so that load_zeros(save_zeros(L)) == L.
void write_zeros(std::ostream& out, const ZeroList& zeros);
void save_zeros(const ZeroList& zeros, const std::filesystem::path& path);

}  // namespace zrl
