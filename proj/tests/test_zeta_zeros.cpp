#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "zrl/error.hpp"
#include "zrl/zeta_zeros.hpp"
#include "zero_oracle.hpp"

using namespace zrl;
using namespace zrl_test;

TEST(HardyZ, FrozenReferenceValues) {
  struct Row {
    double t, theta, z;
  };
  const Row rows[] = {{50.0, 26.4613660701614096, -0.340735005955024983},
                      {150.0, 162.564306884068522, -0.0910109232674035934},
                      {300.0, 429.493181599819067, -0.772987012992304227},
                      {1000.5, 2035.81396007034928, 2.54926113555555556},
                      {5000.25, 14198.7325352425633, 0.0521005439143592677}};
  for (const auto& r : rows) {
    EXPECT_NEAR(riemann_siegel_theta(r.t), r.theta, 1e-10 * r.theta) << r.t;
    EXPECT_NEAR(hardy_z(r.t), r.z, 1e-8) << r.t;
  }
}

TEST(HardyZ, AgreesWithBorweinOracle) {
  for (double t : {14.5, 23.0, 37.25, 49.9}) {
    EXPECT_NEAR(hardy_z(t), static_cast<double>(hardy_z_oracle(t)), 1e-10) << t;
  }
}

TEST(HardyZ, RiemannSiegelAndEulerMaclaurinOverlap) {
  for (double t : {180.0, 199.0, 230.0}) {
    PrecisionConfig cfg;
    EXPECT_NEAR(hardy_z_riemann_siegel(t), hardy_z(t, cfg), 1e-7) << t;
  }
  EXPECT_THROW(hardy_z(5.0), DomainError);
}

TEST(FindZeros, FirstTenMatchIndependentBisection) {
  const auto zeros = find_zeros(50.0);
  const auto oracle = oracle_zeros(10);
  ASSERT_GE(zeros.ordinates.size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(zeros.ordinates[i], oracle[i], 1e-6) << i;
  EXPECT_NEAR(zeros.ordinates[0], 14.134725, 1e-6);
}

TEST(FindZeros, FrozenHighPrecisionOrdinates) {
  const double frozen[] = {14.1347251417346938, 21.022039638771555, 25.0108575801456888,
                           30.4248761258595132, 32.9350615877391897, 37.5861781588256713,
                           40.9187190121474952, 43.3270732809149995, 48.0051508811671597,
                           49.7738324776723022};
  const auto zeros = find_zeros(50.0);
  ASSERT_EQ(zeros.ordinates.size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(zeros.ordinates[i], frozen[i], 1e-8);
}

TEST(FindZeros, CountMatchesRiemannVonMangoldt) {
  const auto zeros = find_zeros(200.0);
  const double smooth = static_cast<double>(theta_stirling(200.0L) / kLPi) + 1.0;
  EXPECT_LE(std::fabs(static_cast<double>(zeros.ordinates.size()) - smooth), 1.0);
  EXPECT_EQ(zeros.ordinates.size(), 79u);
  EXPECT_EQ(zeros.source, ZeroList::Source::Computed);
  EXPECT_DOUBLE_EQ(zeros.t_max, 200.0);
}

TEST(FindZeros, ThreadCountDoesNotChangeOutput) {
  const auto one = find_zeros(300.0, {}, {1});
  const auto four = find_zeros(300.0, {}, {4});
  EXPECT_EQ(one.ordinates, four.ordinates);
}

TEST(FindZeros, RejectsBadHeights) {
  EXPECT_THROW(find_zeros(10.0), DomainError);
  EXPECT_THROW(find_zeros(2e4), DomainError);
}

TEST(ZeroFile, RoundTrip) {
  auto zeros = find_zeros(60.0);
  zeros.field_label = "Q";
  std::stringstream buf;
  write_zeros(buf, zeros);
  const auto back = parse_zeros(buf, "mem");
  EXPECT_EQ(back.field_label, "Q");
  EXPECT_EQ(back.source, ZeroList::Source::File);
  ASSERT_EQ(back.ordinates.size(), zeros.ordinates.size());
  for (std::size_t i = 0; i < back.ordinates.size(); ++i) {
    EXPECT_NEAR(back.ordinates[i], zeros.ordinates[i], 1e-9);
  }
}

TEST(ZeroFile, ParseErrors) {
  std::istringstream bad("14.13\nabc\n");
  try {
    parse_zeros(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream unordered("21.0\n14.1\n");
  EXPECT_THROW(parse_zeros(unordered), OrderError);
  std::istringstream negative("-3.0\n");
  EXPECT_THROW(parse_zeros(negative), ParseError);
  std::istringstream zero("0.000000000\n");
  EXPECT_THROW(parse_zeros(zero), OrderError);
  std::istringstream exponent("1e2\n");
  EXPECT_THROW(parse_zeros(exponent), ParseError);
  EXPECT_THROW(load_zeros("/nonexistent/zeros.txt"), DomainError);
}

TEST(ZeroFile, CommentsAndBlankLinesIgnored) {
  std::istringstream in("# a comment\n\n  14.134725  \n# field: disc:-4\n21.022\n");
  const auto zeros = parse_zeros(in);
  EXPECT_EQ(zeros.ordinates.size(), 2u);
  EXPECT_EQ(zeros.field_label, "disc:-4");
}
