#include "zrl/lefschetz.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "zrl/error.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

void check_permutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int image : perm) {
    if (image < 0 || static_cast<std::size_t>(image) >= perm.size() || seen[image]) {
      throw DomainError("action is not a permutation of the places");
    }
    seen[image] = true;
  }
}

}  // namespace

InfinitePlaceSet InfinitePlaceSet::from_signature(int r1, int r2) {
  if (r1 < 0 || r2 < 0 || r1 + r2 == 0) throw DomainError("signature needs r1, r2 >= 0 and r1 + r2 >= 1");
  InfinitePlaceSet s;
  for (int i = 0; i < r1; ++i) s.places.push_back({Kind::Real, "real" + std::to_string(i)});
  for (int i = 0; i < r2; ++i) s.places.push_back({Kind::Complex, "complex" + std::to_string(i)});
  return s;
}

int InfinitePlaceSet::r1() const noexcept {
  return static_cast<int>(std::count_if(places.begin(), places.end(),
                                        [](const Place& p) { return p.kind == Kind::Real; }));
}

int InfinitePlaceSet::r2() const noexcept { return static_cast<int>(places.size()) - r1(); }

AutomorphismAction AutomorphismAction::identity(std::size_t count) {
  AutomorphismAction a;
  a.permutation.resize(count);
  std::iota(a.permutation.begin(), a.permutation.end(), 0);
  return a;
}

int AutomorphismAction::order() const {
  check_permutation(permutation);
  long long order = 1;
  std::vector<bool> visited(permutation.size(), false);
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (visited[i]) continue;
    long long length = 0;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(permutation[j])) {
      visited[j] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return static_cast<int>(order);
}

AutomorphismAction AutomorphismAction::power(int j) const {
  check_permutation(permutation);
  if (j < 0) throw DomainError("negative powers are not supported");
  AutomorphismAction out = identity(permutation.size());
  for (int k = 0; k < j; ++k) {
    for (auto& image : out.permutation) image = permutation[image];
  }
  return out;
}

std::size_t AutomorphismAction::orbit_count() const {
  check_permutation(permutation);
  std::vector<bool> visited(permutation.size(), false);
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (visited[i]) continue;
    ++orbits;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(permutation[j])) visited[j] = true;
  }
  return orbits;
}

void AutomorphismAction::validate(const InfinitePlaceSet& places) const {
  if (permutation.size() != places.size()) throw DomainError("action size differs from the place count");
  check_permutation(permutation);
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (places.places[i].kind != places.places[permutation[i]].kind) {
      throw DomainError("action maps a real place to a complex place");
    }
  }
}

int euler_characteristic_infinite(const InfinitePlaceSet& places) { return places.r1() + places.r2(); }

int arithmetic_lefschetz(const InfinitePlaceSet& places, const AutomorphismAction& action) {
  action.validate(places);
  int fixed = 0;
  for (std::size_t i = 0; i < action.permutation.size(); ++i) {
    if (static_cast<std::size_t>(action.permutation[i]) == i) ++fixed;  // epsilon_x = +1
  }
  return fixed;
}

double dynamical_lefschetz(const std::vector<FixedPointDatum>& fixed_points) {
  CompensatedSum sum;
  for (const auto& x : fixed_points) {
    if (x.epsilon != 1 && x.epsilon != -1) throw DomainError("epsilon must be +1 or -1");
    sum += x.local_trace * x.epsilon;
  }
  return sum.value();
}

VanishingCheck compact_support_vanishing_check(bool orbit_only,
                                               const std::vector<FixedPointDatum>& fixed_points) {
  if (orbit_only) {
    if (!fixed_points.empty()) throw DomainError("orbit-only flow cannot carry fixed-point data");
    return {dynamical_lefschetz({}), true};
  }
  return {dynamical_lefschetz(fixed_points), false};
}

BurnsideCheck burnside_check(const InfinitePlaceSet& places, const AutomorphismAction& action) {
  action.validate(places);
  const int n = action.order();
  BurnsideCheck out;
  for (int j = 0; j < n; ++j) out.fixed_point_total += arithmetic_lefschetz(places, action.power(j));
  out.orbit_total = static_cast<long long>(n) * static_cast<long long>(action.orbit_count());
  out.pass = out.fixed_point_total == out.orbit_total;
  return out;
}

std::pair<InfinitePlaceSet, AutomorphismAction> parse_place_action(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (!line.empty() && line.front() != '#') lines.emplace_back(line_no, line);
  }
  if (lines.size() != 2) throw ParseError("expected a 'r1 r2' header and one permutation line", line_no);

  std::istringstream header(lines[0].second);
  int r1 = 0;
  int r2 = 0;
  std::string extra;
  if (!(header >> r1 >> r2) || (header >> extra) || r1 < 0 || r2 < 0 || r1 + r2 == 0) {
    throw ParseError("malformed signature header '" + lines[0].second + "'", lines[0].first);
  }
  AutomorphismAction action;
  std::istringstream perm(lines[1].second);
  std::string token;
  while (perm >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("malformed place index '" + token + "'", lines[1].first);
    action.permutation.push_back(value);
  }
  InfinitePlaceSet places = InfinitePlaceSet::from_signature(r1, r2);
  if (action.permutation.size() != places.size()) {
    throw ParseError("permutation length differs from r1 + r2", lines[1].first);
  }
  action.validate(places);
  return {places, action};
}

std::pair<InfinitePlaceSet, AutomorphismAction> load_place_action(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open place/action file " + path.string());
  return parse_place_action(in);
}

}  // namespace zrl
