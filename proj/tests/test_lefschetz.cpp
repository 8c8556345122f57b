#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "zrl/error.hpp"
#include "zrl/lefschetz.hpp"

using namespace zrl;

namespace {

// Fixed points of sigma^j counted by direct iteration.
long long brute_fixed(const std::vector<int>& perm, int j) {
  long long count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t x = i;
    for (int k = 0; k < j; ++k) x = static_cast<std::size_t>(perm[x]);
    count += (x == i);
  }
  return count;
}

}  // namespace

TEST(Lefschetz, IdentityGivesPlaceCount) {
  for (auto [r1, r2] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 0}, std::pair{1, 1}}) {
    const auto places = InfinitePlaceSet::from_signature(r1, r2);
    EXPECT_EQ(arithmetic_lefschetz(places, AutomorphismAction::identity(places.size())), r1 + r2);
    EXPECT_EQ(euler_characteristic_infinite(places), r1 + r2);
  }
}

TEST(Lefschetz, QuadraticExamples) {
  // Q(sqrt 2): the nontrivial automorphism swaps the two real places.
  const auto real_quadratic = InfinitePlaceSet::from_signature(2, 0);
  EXPECT_EQ(arithmetic_lefschetz(real_quadratic, {{1, 0}}), 0);
  // Q(i): complex conjugation fixes the single complex place.
  const auto gaussian = InfinitePlaceSet::from_signature(0, 1);
  EXPECT_EQ(arithmetic_lefschetz(gaussian, {{0}}), 1);
}

TEST(Lefschetz, KindViolationAndBadPermutations) {
  const auto places = InfinitePlaceSet::from_signature(1, 1);
  EXPECT_THROW(arithmetic_lefschetz(places, {{1, 0}}), DomainError);
  EXPECT_THROW(arithmetic_lefschetz(places, {{0, 0}}), DomainError);
  EXPECT_THROW(arithmetic_lefschetz(places, {{0}}), DomainError);
  EXPECT_THROW(InfinitePlaceSet::from_signature(0, 0), DomainError);
}

TEST(Lefschetz, EmptyFixedPointDataVanishes) {
  const auto check = compact_support_vanishing_check(true);
  EXPECT_TRUE(check.vanishing_asserted);
  EXPECT_EQ(check.value, 0.0);
  EXPECT_EQ(dynamical_lefschetz({}), 0.0);
  EXPECT_DOUBLE_EQ(dynamical_lefschetz({{2.0, 1}, {0.5, -1}}), 1.5);
  EXPECT_THROW(dynamical_lefschetz({{1.0, 0}}), DomainError);
  EXPECT_THROW(compact_support_vanishing_check(true, {{1.0, 1}}), DomainError);
}

TEST(Lefschetz, BurnsideOnRandomActions) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> size(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    int r1 = size(rng);
    const int r2 = size(rng);
    if (r1 + r2 == 0) r1 = 1;
    const auto places = InfinitePlaceSet::from_signature(r1, r2);
    std::vector<int> reals(r1), complexes(r2);
    std::iota(reals.begin(), reals.end(), 0);
    std::iota(complexes.begin(), complexes.end(), r1);
    std::shuffle(reals.begin(), reals.end(), rng);
    std::shuffle(complexes.begin(), complexes.end(), rng);
    AutomorphismAction action;
    action.permutation = reals;
    action.permutation.insert(action.permutation.end(), complexes.begin(), complexes.end());

    const auto check = burnside_check(places, action);
    EXPECT_TRUE(check.pass) << trial;
    long long total = 0;
    for (int j = 0; j < action.order(); ++j) total += brute_fixed(action.permutation, j);
    EXPECT_EQ(check.fixed_point_total, total);
    EXPECT_EQ(check.orbit_total % action.order(), 0);
  }
}

TEST(Lefschetz, OrderAndPowers) {
  const AutomorphismAction a{{1, 2, 0, 4, 3}};
  EXPECT_EQ(a.order(), 6);
  EXPECT_EQ(a.orbit_count(), 2u);
  EXPECT_EQ(a.power(6).permutation, AutomorphismAction::identity(5).permutation);
  EXPECT_EQ(a.power(2).permutation, (std::vector<int>{2, 0, 1, 3, 4}));
}

TEST(Lefschetz, ParsePlaceAction) {
  std::istringstream in("# Q(sqrt 2)\n2 0\n1 0\n");
  const auto [places, action] = parse_place_action(in);
  EXPECT_EQ(places.r1(), 2);
  EXPECT_EQ(arithmetic_lefschetz(places, action), 0);
  std::istringstream bad("2 0\n1 x\n");
  EXPECT_THROW(parse_place_action(bad), ParseError);
  std::istringstream missing("2 0\n");
  EXPECT_THROW(parse_place_action(missing), ParseError);
}
