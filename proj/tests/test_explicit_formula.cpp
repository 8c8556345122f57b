#include <gtest/gtest.h>

#include <cmath>

#include "zrl/arithmetic.hpp"
#include "zrl/error.hpp"
#include "zrl/explicit_formula.hpp"

using namespace zrl;

namespace {

const ZeroList& zeros_to_100() {
  static const ZeroList zeros = find_zeros(100.0);
  return zeros;
}

double von_mangoldt(std::int64_t n) {
  for (std::int64_t p : primes_up_to(n)) {
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) return std::log(static_cast<double>(p));
    if (m != n) return 0.0;
  }
  return 0.0;
}

// Composite Simpson with many panels; the bump is flat to all orders at its
// ends, so this converges fast and shares no code with the library quadrature.
double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

TEST(TestFunction, GaussianTransformClosedFormMatchesQuadrature) {
  const auto phi = TestFunction::gaussian(1.2, 0.4, 10.0);
  for (Complex s : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.5, 7.0}, Complex{0.5, -20.0}}) {
    EXPECT_LT(std::abs(transform(phi, s) - transform_by_quadrature(phi, s)), 1e-11) << s;
  }
  // Untruncated closed form: sqrt(2 pi) sigma e^{s c + s^2 sigma^2 / 2}.
  const Complex s{0.5, 3.0};
  const Complex want = std::sqrt(kTwoPi) * 0.4 * std::exp(s * 1.2 + s * s * 0.16 / 2.0);
  EXPECT_LT(std::abs(transform(phi, s) - want), 1e-13);
}

TEST(TestFunction, BumpShapeAndSupport) {
  const auto phi = TestFunction::bump(2.0, 0.5);
  EXPECT_DOUBLE_EQ(phi(2.0), std::exp(-1.0));
  EXPECT_EQ(phi(2.5), 0.0);
  EXPECT_EQ(phi(1.4), 0.0);
  EXPECT_EQ(phi.support(), std::make_pair(1.5, 2.5));
  EXPECT_EQ(phi.sign_side(), SignSide::PositiveSupport);
  EXPECT_EQ(phi.reflected().sign_side(), SignSide::NegativeSupport);
  EXPECT_EQ(TestFunction::bump(0.1, 0.5).sign_side(), SignSide::StraddlesZero);
  EXPECT_THROW(TestFunction::bump(1.0, 0.0), DomainError);
  EXPECT_THROW(TestFunction::gaussian(1.0, 0.2, 3.0), DomainError);
}

TEST(PrimeSide, BumpAroundLogTwoSeesOnlyTwo) {
  const double l2 = std::log(2.0);
  const auto phi = TestFunction::bump(l2, 0.1);
  const auto side = prime_side(phi, NumberFieldData::rationals(), 100.0);
  EXPECT_NEAR(side.value, l2 * phi(l2), 1e-15);
  EXPECT_EQ(side.tail_bound, 0.0);
  const auto mirror = prime_side(phi.reflected(), NumberFieldData::rationals(), 100.0);
  EXPECT_NEAR(mirror.value, l2 * 0.5 * phi(l2), 1e-15);
}

TEST(PrimeSide, GaussianIntegersMatchDirichletCoefficients) {
  // -zeta_K'/zeta_K = -zeta'/zeta - L'/L gives Lambda_K(n) = Lambda(n)(1 + chi_{-4}(n)).
  const auto field = NumberFieldData::quadratic(-4);
  const auto phi = TestFunction::gaussian(1.5, 0.4) + 0.5 * TestFunction::bump(2.8, 0.6);
  const double cutoff = 200.0;
  double want = 0.0;
  for (std::int64_t n = 2; n <= 200; ++n) {
    const int chi = n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1);
    const double lambda = von_mangoldt(n) * (1.0 + chi);
    const double ln = std::log(static_cast<double>(n));
    want += lambda * (phi(ln) + phi(-ln) / static_cast<double>(n));
  }
  EXPECT_NEAR(prime_side(phi, field, cutoff).value, want, 1e-12 * std::fabs(want));
}

TEST(PrimeSide, CutoffBelowSupportThrows) {
  EXPECT_THROW(prime_side(TestFunction::bump(3.0, 0.5), NumberFieldData::rationals(), 20.0),
               TruncationError);
}

TEST(WeilTerm, MatchesIndependentSimpson) {
  for (int kappa : {-1, -2}) {
    for (double c : {0.8, 1.5, 3.0}) {
      const auto phi = TestFunction::bump(c, 0.6);
      const auto pos = [&](double t) { return phi(t) / (1.0 - std::exp(kappa * t)); };
      EXPECT_NEAR(weil_term(phi, {kappa}), simpson(pos, c - 0.6, c + 0.6, 20000), 1e-11);
      const auto neg_phi = phi.reflected();
      const auto neg = [&](double t) { return neg_phi(t) * std::exp(t) / (1.0 - std::exp(-kappa * t)); };
      EXPECT_NEAR(weil_term(neg_phi, {kappa}), simpson(neg, -c - 0.6, -c + 0.6, 20000), 1e-11);
    }
  }
}

TEST(WeilTerm, StraddlingSupportAndBadKappa) {
  EXPECT_THROW(weil_term(TestFunction::bump(0.0, 1.0), {-2}), UnsupportedPrincipalValueError);
  EXPECT_THROW(weil_term(TestFunction::bump(2.0, 1.0), {-3}), DomainError);
  EXPECT_THROW(DistributionTerm::weil(1.0, 0), DomainError);
}

TEST(ExplicitFormula, GaussianHeadlineResidual) {
  const auto phi = TestFunction::gaussian(2.0, 0.3, 6.0);
  const auto& zeros = zeros_to_100();
  ASSERT_EQ(zeros.ordinates.size(), 29u);
  const auto r = check_explicit_formula(phi, NumberFieldData::rationals(), zeros, 45.0);
  EXPECT_LT(r.residual, 1e-6);
  EXPECT_LT(std::fabs(r.spectral.imag()), 1e-12);
  EXPECT_LE(r.residual, r.total_tail_bound() + r.gaussian_window_leak + 1e-9);
  EXPECT_EQ(r.zeros_used, 29u);
}

TEST(ExplicitFormula, BumpResidualWithinTolerance) {
  const auto phi = TestFunction::bump(2.0, 0.7);
  const auto r = check_explicit_formula(phi, NumberFieldData::rationals(), zeros_to_100(), 45.0);
  EXPECT_LT(r.residual, 1e-4);
  EXPECT_LE(r.residual, r.total_tail_bound());
}

TEST(ExplicitFormula, MoreZerosShrinkBumpResidual) {
  const auto phi = TestFunction::bump(2.0, 0.7);
  const auto q = NumberFieldData::rationals();
  const auto low = check_explicit_formula(phi, q, zeros_to_100(), 45.0);
  const auto high = check_explicit_formula(phi, q, find_zeros(200.0), 45.0);
  EXPECT_LT(high.residual, low.residual);
  EXPECT_LT(high.zero_tail_bound, low.zero_tail_bound);
}

TEST(ExplicitFormula, SidesAreLinear) {
  const auto q = NumberFieldData::rationals();
  const auto f = TestFunction::gaussian(2.0, 0.3);
  const auto g = TestFunction::bump(1.5, 0.5);
  const auto h = 2.0 * f + (-0.75) * g;
  const Complex lhs = spectral_side(h, zeros_to_100(), q).value;
  const Complex rhs = 2.0 * spectral_side(f, zeros_to_100(), q).value - 0.75 * spectral_side(g, zeros_to_100(), q).value;
  EXPECT_LT(std::abs(lhs - rhs), 1e-11);
  const Complex glhs = geometric_side(h, q, 45.0).value;
  const Complex grhs = 2.0 * geometric_side(f, q, 45.0).value - 0.75 * geometric_side(g, q, 45.0).value;
  EXPECT_LT(std::abs(glhs - grhs), 1e-12);
}

TEST(ExplicitFormula, CutoffEnlargementIsBitIdenticalForBumps) {
  const auto q = NumberFieldData::rationals();
  const auto phi = TestFunction::bump(2.0, 0.7);
  const double a = geometric_side(phi, q, 45.0).value.real();
  const double b = geometric_side(phi, q, 5000.0).value.real();
  EXPECT_EQ(a, b);
}

TEST(ExplicitFormula, SidesArePairingsOfDistributions) {
  const auto q = NumberFieldData::rationals();
  const auto phi = TestFunction::gaussian(2.0, 0.3);
  EXPECT_EQ(pair(spectral_distribution(zeros_to_100()), phi), spectral_side(phi, zeros_to_100(), q).value);
  EXPECT_EQ(pair(geometric_distribution(q, 45.0), phi), geometric_side(phi, q, 45.0).value);
}

TEST(ExplicitFormula, DistributionLayout) {
  const auto spec = spectral_distribution(zeros_to_100());
  ASSERT_EQ(spec.size(), 2 + 2 * 29u);
  EXPECT_EQ(spec[0].exponent, Complex(0.0, 0.0));
  EXPECT_EQ(spec[1].exponent, Complex(1.0, 0.0));
  EXPECT_EQ(spec[2].coefficient, -1.0);
  const auto geo = geometric_distribution(NumberFieldData::quadratic(-4), 10.0);
  EXPECT_EQ(geo.front().kind, DistributionTerm::Kind::Delta);
  EXPECT_NEAR(geo.front().coefficient, -std::log(4.0), 1e-15);
  EXPECT_EQ(geo.back().kind, DistributionTerm::Kind::Weil);
  EXPECT_EQ(geo.back().kappa, -1);
}

TEST(ExplicitFormula, ZeroListChecks) {
  const auto q = NumberFieldData::rationals();
  const auto phi = TestFunction::gaussian(2.0, 0.3);
  ZeroList empty;
  empty.source = ZeroList::Source::File;
  EXPECT_THROW(spectral_side(phi, empty, q), DomainError);
  EXPECT_NO_THROW(spectral_side(phi, empty, q, {}, true));
  ZeroList labelled = zeros_to_100();
  labelled.field_label = "disc:-4";
  EXPECT_THROW(spectral_side(phi, labelled, q), DomainError);
  EXPECT_NO_THROW(spectral_side(phi, labelled, NumberFieldData::quadratic(-4)));
}

TEST(ExplicitFormula, ZeroTestFunctionIsZeroEverywhere) {
  const auto r = check_explicit_formula(TestFunction{}, NumberFieldData::rationals(), zeros_to_100(), 45.0);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(r.spectral, Complex{});
}
