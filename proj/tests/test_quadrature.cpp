#include <gtest/gtest.h>

#include <cmath>

#include "zrl/error.hpp"
#include "zrl/quadrature.hpp"
#include "zrl/summation.hpp"

using namespace zrl;

TEST(Quadrature, PolynomialsAreExact) {
  // Degree 29 is the exactness limit of the 15-point rule on each panel.
  const auto f = [](double x) { return std::pow(x, 29) + 3.0 * x * x; };
  EXPECT_NEAR(integrate_real(f, 0.0, 1.0), 1.0 / 30.0 + 1.0, 1e-14);
}

TEST(Quadrature, SmoothIntegrals) {
  EXPECT_NEAR(integrate_real([](double x) { return std::exp(-x * x); }, -8.0, 8.0), std::sqrt(M_PI),
              1e-13);
  EXPECT_NEAR(integrate_real([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0), M_PI / 4.0, 1e-14);
}

TEST(Quadrature, OscillatoryComplex) {
  const auto f = [](double t) { return std::exp(std::complex<double>(0.0, 40.0 * t)); };
  const std::complex<double> want = (std::exp(std::complex<double>(0.0, 40.0)) - 1.0) /
                                    std::complex<double>(0.0, 40.0);
  EXPECT_LT(std::abs(integrate_complex(f, 0.0, 1.0) - want), 1e-13);
}

TEST(Quadrature, KinkNeedsRefinementButConverges) {
  EXPECT_NEAR(integrate_real([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0),
              0.5 * (0.09 + 0.49), 1e-12);
}

TEST(Quadrature, ExhaustionAndBadInterval) {
  PrecisionConfig cfg;
  cfg.quadrature_max_depth = 2;
  cfg.target_abs_error = 1e-15;
  const auto f = [](double x) { return 1.0 / std::sqrt(x); };
  EXPECT_THROW(integrate_real(f, 0.0, 1.0, cfg), ConvergenceError);
  EXPECT_THROW(integrate_real(f, 1.0, 1.0), DomainError);
}

TEST(Summation, CompensatedBeatsNaive) {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 1000000; ++i) s += 1e-16;
  s += -1.0;
  EXPECT_NEAR(s.value(), 1e-10, 1e-20);
}

TEST(Precision, ForToleranceValidates) {
  EXPECT_NO_THROW(PrecisionConfig::for_tolerance(1e-8).validate());
  EXPECT_THROW(PrecisionConfig::for_tolerance(-1.0), DomainError);
  EXPECT_THROW(PrecisionConfig::for_tolerance(0.0), DomainError);
}
