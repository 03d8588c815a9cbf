#include <array>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/quad.hpp"
#include "zetalab/specfun.hpp"

using namespace zetalab;
using namespace zetalab::quad;

namespace {
const PrecisionContext ctx30(30);
}

TEST(TanhSinh, Trivial) {
  EXPECT_REAL_NEAR(tanh_sinh_1d([](const Real&, const Real&) { return Real(1); }, ctx30), Real(1),
                   ctx30.epsilon());
  EXPECT_REAL_NEAR(
      tanh_sinh_1d([](const Real& x, const Real& c) { return -log_of(x, c); }, ctx30), Real(1),
      ctx30.epsilon());
}

TEST(TanhSinh, ZetaThreeIntegral) {
  const Real v = tanh_sinh_1d(
      [](const Real& x, const Real& c) { return log_of(x, c) * log_of(c, x) / x; }, ctx30);
  EXPECT_REAL_NEAR(v, oracle::zeta_sum(3), pow10(-25));
}

TEST(TanhSinh, NodesStayInside) {
  bool touched = false;
  tanh_sinh(
      [&](const Real& x, const Real& c) {
        if (x <= 0 || x >= 1 || c <= 0 || c >= 1) touched = true;
        return Real(1);
      },
      ctx30.epsilon());
  EXPECT_FALSE(touched);
}

TEST(TanhSinh, ConvergenceErrorCarriesEstimates) {
  TanhSinhOptions options;
  options.max_level = 4;
  try {
    tanh_sinh([](const Real& x, const Real&) { return 1 / sqrt(sqrt(x * x * x)); },
              pow10(-40), options);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_FALSE(e.last_estimate().empty());
    EXPECT_FALSE(e.previous_estimate().empty());
  }
}

TEST(Integrate, Theorem21OneAndTwo) {
  EXPECT_REAL_NEAR(integrate(IntegralSpec::theorem21(1), ctx30), oracle::zeta_sum(3), pow10(-25));
  EXPECT_REAL_NEAR(-integrate(IntegralSpec::theorem21(2), ctx30), oracle::zeta_sum(5), pow10(-25));
}

TEST(Integrate, Corollary23Example) {
  const Real v = integrate(IntegralSpec::corollary23(2, 2), ctx30);
  EXPECT_REAL_NEAR(-v, oracle::zeta_sum(5) / 16, pow10(-25));
  EXPECT_NEAR(static_cast<double>(-v), 0.0648079846, 1e-10);
}

TEST(Integrate, Corollary23Scaling) {
  const Real z3 = oracle::zeta_sum(3);
  for (int r = 1; r <= 5; ++r)
    EXPECT_REAL_NEAR(integrate(IntegralSpec::corollary23(1, r), ctx30) * r * r, z3, pow10(-25));
}

TEST(Integrate, Janous) {
  EXPECT_REAL_NEAR(integrate(IntegralSpec::janous(), ctx30) / 2, oracle::zeta_sum(3), pow10(-25));
}

TEST(Integrate, FubiniOrderIndependence) {
  const std::array<std::size_t, 2> swapped = {1, 0};
  for (const auto& spec : {IntegralSpec::theorem21(2), IntegralSpec::corollary23(2, 3),
                           IntegralSpec::theorem25(1, 1), IntegralSpec::theorem25(2, 2),
                           IntegralSpec::beukers_cell(1, 3)}) {
    const Real a = integrate(spec, ctx30);
    const Real b = integrate(spec, ctx30, swapped);
    EXPECT_REAL_NEAR(a, b, 2 * ctx30.epsilon()) << to_string(spec.family);
  }
}

TEST(Integrate, BeukersCellAgainstSeries) {
  // r=s=0 cell: 2 zeta(3)
  EXPECT_REAL_NEAR(integrate(IntegralSpec::beukers_cell(0, 0), ctx30), 2 * oracle::zeta_sum(3),
                   pow10(-25));
}

TEST(Integrate, SpecValidation) {
  IntegralSpec bad = IntegralSpec::theorem25(1, 1);
  bad.dimension = 3;
  EXPECT_THROW(integrate(bad, ctx30), DomainError);
  EXPECT_THROW(IntegralSpec::z_km(1, -1).validate(), DomainError);
  EXPECT_THROW(IntegralSpec::kontsevich(1).validate(), DomainError);
  EXPECT_THROW(IntegralSpec::theorem21(0).validate(), DomainError);
}

TEST(Integrate, CapabilityBounds) {
  EXPECT_THROW(integrate(IntegralSpec::theorem21(6), ctx30), CapabilityError);
  EXPECT_THROW(monte_carlo_integral(IntegralSpec::janous(), 10'000, 0), CapabilityError);
}

TEST(Integrate, MonteCarloFallbackForFourDimensions) {
  const auto mc = monte_carlo_integral(IntegralSpec::theorem21(4), 1'000'000, 0);
  // (-1)^{n+1} = -1 for n = 4
  EXPECT_LE(std::abs(-mc.estimate - static_cast<double>(specfun::zeta(9, ctx30))),
            3 * mc.standard_error);
  EXPECT_EQ(static_cast<double>(integrate(IntegralSpec::theorem21(4), ctx30)), mc.estimate);
}

TEST(MonteCarlo, DeviatesAreOpenUnit) {
  for (std::uint64_t i = 0; i < 100'000; ++i) {
    const double u = uniform_deviate(0, i, 0, 1);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(uniform_deviate(3, 10, 1, 2), uniform_deviate(3, 10, 1, 2));
  EXPECT_NE(uniform_deviate(3, 10, 1, 2), uniform_deviate(4, 10, 1, 2));
}

TEST(MonteCarlo, KontsevichCoverage) {
  for (int k : {2, 3}) {
    const auto mc = monte_carlo_kontsevich(k, 1'000'000, 0, ctx30);
    EXPECT_EQ(mc.samples, 1'000'000u);
    EXPECT_LE(std::abs(mc.estimate - static_cast<double>(specfun::zeta(k, ctx30))),
              3 * mc.standard_error)
        << "k=" << k;
  }
}

TEST(MonteCarlo, BitIdenticalAcrossWorkers) {
  const auto a = monte_carlo_kontsevich(2, 300'000, 42, ctx30, 1);
  const auto b = monte_carlo_kontsevich(2, 300'000, 42, ctx30, 3);
  const auto c = monte_carlo_kontsevich(2, 300'000, 42, ctx30, 0);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_EQ(a.estimate, c.estimate);
}

TEST(MonteCarlo, SeededCoverageRate) {
  // 3-sigma intervals should bracket the quadrature value in >= 99 of 100 runs
  const double reference = std::numbers::pi * std::numbers::pi / 6;
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto mc = monte_carlo_kontsevich(2, 100'000, seed, ctx30);
    if (std::abs(mc.estimate - reference) <= 3 * mc.standard_error) ++covered;
  }
  EXPECT_GE(covered, 99);
}

TEST(Kontsevich, QuadratureMatchesZeta) {
  EXPECT_REAL_NEAR(integrate(IntegralSpec::kontsevich(2), ctx30.with_epsilon(pow10(-20))),
                   oracle::zeta_sum(2), pow10(-18));
  EXPECT_REAL_NEAR(integrate(IntegralSpec::kontsevich(3), ctx30.with_epsilon(pow10(-12))),
                   oracle::zeta3_literal(), pow10(-10));
}

TEST(MonteCarlo, Preconditions) {
  EXPECT_THROW(monte_carlo_kontsevich(1, 100'000, 0, ctx30), DomainError);
  EXPECT_THROW(monte_carlo_kontsevich(2, 9'999, 0, ctx30), DomainError);
}

TEST(EulerPhiIntegral, IdentityOne) {
  EXPECT_TRUE(euler_phi_identity_check(1, ctx30.with_epsilon(pow10(-12))) <= pow10(-8));
  EXPECT_NEAR(static_cast<double>(specfun::zeta(2, ctx30) * specfun::zeta(3, ctx30)),
              1.9773043502, 1e-10);
}

TEST(EulerPhiIntegral, IdentityTwoCarriesSign) {
  const PrecisionContext q = ctx30.with_epsilon(pow10(-9));
  EXPECT_TRUE(euler_phi_identity_check(2, q) <= pow10(-6));
  const Real raw = euler_phi_integral(2, q);
  EXPECT_TRUE(raw < 0);
  EXPECT_NEAR(static_cast<double>(-raw), 1.1222910011, 1e-8);
}

TEST(EulerPhiIntegral, TruncationMatchesPartialZetaSum) {
  const PrecisionContext q = ctx30.with_epsilon(pow10(-12));
  for (std::uint64_t terms : {50u, 100u}) {
    const Real expected =
        oracle::zeta_sum(3) * to_real(specfun::harmonic(terms, 2).value);
    EXPECT_REAL_NEAR(euler_phi_truncated_integral(1, terms, q), expected, pow10(-8));
  }
  // and the two truncations differ by zeta(3) (H_100^(2) - H_50^(2))
  const Real gap = euler_phi_truncated_integral(1, 100, q) - euler_phi_truncated_integral(1, 50, q);
  EXPECT_TRUE(gap > pow10(-2));
}

TEST(EulerPhiIntegral, DimensionBound) {
  EXPECT_THROW(euler_phi_identity_check(3, ctx30), CapabilityError);
}
