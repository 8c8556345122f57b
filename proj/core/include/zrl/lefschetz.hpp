#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zrl {

/// Infinite places of a number field.
struct InfinitePlaceSet {
  enum class Kind { Real, Complex };
  struct Place {
    Kind kind;
    std::string label;
  };

  std::vector<Place> places;

  /// r1 real places labelled real0.. followed by r2 complex places complex0..
  static InfinitePlaceSet from_signature(int r1, int r2);

  int r1() const noexcept;
  int r2() const noexcept;
  std::size_t size() const noexcept { return places.size(); }
};

/// Permutation sigma of the places: place i goes to permutation[i].
struct AutomorphismAction {
  std::vector<int> permutation;

  static AutomorphismAction identity(std::size_t count);

  /// Least N >= 1 with sigma^N = id. Throws DomainError if not a permutation.
  int order() const;
  AutomorphismAction power(int j) const;
  std::size_t orbit_count() const;

  /// Throws DomainError unless this is a permutation of the places that maps
  /// real places to real places and complex to complex.
  void validate(const InfinitePlaceSet& places) const;
};

struct FixedPointDatum {
  double local_trace = 1.0;  // Tr(e_x | F_x)
  int epsilon = 1;           // +1 or -1
};

/// r1 + r2.
int euler_characteristic_infinite(const InfinitePlaceSet& places);

/// Number of places fixed by sigma; each fixed place of a number ring counts
/// with sign +1.
int arithmetic_lefschetz(const InfinitePlaceSet& places, const AutomorphismAction& action);

/// sum of local_trace * epsilon. Throws DomainError if an epsilon is not +-1.
double dynamical_lefschetz(const std::vector<FixedPointDatum>& fixed_points);

struct VanishingCheck {
  double value = 0.0;
  bool vanishing_asserted = false;  // true when orbit_only, in which case value == 0
};

/// With orbit_only the modelled flow has no fixed points: the data must be
/// empty (DomainError otherwise) and the trace on compactly supported
/// cohomology is 0. Without it the sum is returned with no vanishing claim.
VanishingCheck compact_support_vanishing_check(bool orbit_only,
                                               const std::vector<FixedPointDatum>& fixed_points = {});

struct BurnsideCheck {
  long long fixed_point_total = 0;  // sum_{j < N} arithmetic_lefschetz(sigma^j)
  long long orbit_total = 0;        // N * (number of sigma orbits)
  bool pass = false;
};

BurnsideCheck burnside_check(const InfinitePlaceSet& places, const AutomorphismAction& action);

/// Place/action file: a header line "r1 r2", then one line with the
/// permutation as 0-based place indices (real places first). '#' comments.
std::pair<InfinitePlaceSet, AutomorphismAction> parse_place_action(std::istream& in);
std::pair<InfinitePlaceSet, AutomorphismAction> load_place_action(const std::filesystem::path& path);

}  // namespace zrl
