#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetalab/closedforms.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/quad.hpp"
#include "zetalab/specfun.hpp"

using namespace zetalab;
using namespace zetalab::closedforms;

namespace {

const PrecisionContext ctx30(30);
const PrecisionContext ctx40(40);

Real z(int s) { return specfun::zeta(s, ctx40); }

}  // namespace

TEST(ClosedFormI, ZetaCoefficientsAtK1) {
  const auto f = closed_form_i(1);
  EXPECT_EQ(f.zeta_coeff(6), BigRational(4, 3));
  EXPECT_EQ(f.zeta_coeff(5), BigRational(4, 9));
  EXPECT_EQ(f.zeta_coeff(4), BigRational(4, 27));
  EXPECT_EQ(f.zeta_coeff(3), BigRational(4, 81));
  EXPECT_EQ(f.zeta_coeff(2), BigRational(4, 243));
  EXPECT_EQ(f.log2_coeff(), 0);
}

TEST(ClosedFormII, Log2CoefficientAtK1) {
  const auto f = closed_form_ii(1);
  EXPECT_EQ(f.log2_coeff(), BigRational(8, 729));
  EXPECT_EQ(f.zeta_coeff(6), BigRational(63, 8 * 3));
  EXPECT_EQ(f.zeta_coeff(5), BigRational(31, 4 * 9));
  EXPECT_EQ(f.zeta_coeff(4), BigRational(15, 2 * 27));
  EXPECT_EQ(f.zeta_coeff(3), BigRational(7, 81));
  EXPECT_EQ(f.zeta_coeff(2), BigRational(6, 243));
}

TEST(ZClosedForm, ZetaPartM3K1) {
  const auto zf = z_closed_form(1, 3);
  EXPECT_EQ(zf.form.zeta_coeff(5), BigRational(24, 3));
  EXPECT_EQ(zf.form.zeta_coeff(4), BigRational(24, 9));
  EXPECT_EQ(zf.form.zeta_coeff(3), BigRational(24, 27));
  EXPECT_EQ(zf.form.zeta_coeff(2), BigRational(24, 81));
  EXPECT_TRUE(zf.s_over_t > 0);
  EXPECT_EQ(zf.form.constant_term(), -zf.s_over_t);
}

TEST(ZClosedForm, Preconditions) {
  EXPECT_THROW(z_closed_form(0, 1), DomainError);
  EXPECT_THROW(z_closed_form(1, 0), DomainError);
  EXPECT_THROW(closed_form_i(0), DomainError);
}

TEST(Oracles, TailBoundsAreSmallEnough) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_TRUE(oracle_i(k, ctx40).tail_bound <= pow10(-18));
    EXPECT_TRUE(oracle_ii(k, ctx40).tail_bound <= pow10(-18));
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(oracle_z(k, m, ctx40).tail_bound <= pow10(-18));
  }
}

TEST(Oracles, PartialSumsMonotone) {
  Real previous = 0;
  for (std::uint64_t n : {10u, 100u, 1000u, 10000u}) {
    const auto o = oracle_i(2, ctx40, n);
    EXPECT_TRUE(o.value < previous);
    previous = o.value;
  }
  // never below the closed-form limit
  EXPECT_TRUE(previous > form_eval(closed_form_i(2), ctx40));
}

TEST(Oracles, ClosedFormsWithin1e15) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_REAL_NEAR(form_eval(closed_form_i(k), ctx40), oracle_i(k, ctx40).value, pow10(-15));
    EXPECT_REAL_NEAR(form_eval(closed_form_ii(k), ctx40), oracle_ii(k, ctx40).value, pow10(-15));
    for (int m = 1; m <= 3; ++m)
      EXPECT_REAL_NEAR(form_eval(z_closed_form(k, m).form, ctx40), oracle_z(k, m, ctx40).value,
                       pow10(-15))
          << "k=" << k << " m=" << m;
  }
}

TEST(Oracles, LargeKCancellation) {
  // the 4 zeta(6) / (2k+1) leading term cancels against the harmonic
  // corrections; the sum is O(log(2k+1) / (2k+1)^6). Reference from an
  // external 60-digit evaluation of the series at k = 50.
  const Real value = form_eval(closed_form_i(50), ctx30);
  EXPECT_REAL_NEAR(value, Real("-1.10729288570648496435916886340e-11"), pow10(-25));
  EXPECT_TRUE(abs(101 * value) < pow10(-8));
}

TEST(Quadrature, MatchesClosedForms) {
  for (int k = 1; k <= 2; ++k) {
    EXPECT_REAL_NEAR(quad::integrate(quad::IntegralSpec::theorem25(k, 1), ctx30),
                     form_eval(closed_form_i(k), ctx30), pow10(-10));
    EXPECT_REAL_NEAR(quad::integrate(quad::IntegralSpec::theorem25(k, 2), ctx30),
                     form_eval(closed_form_ii(k), ctx30), pow10(-10));
    for (int m = 1; m <= 3; ++m)
      EXPECT_REAL_NEAR(z_integral_sign(m) * quad::integrate(quad::IntegralSpec::z_km(k, m), ctx30),
                       form_eval(z_closed_form(k, m).form, ctx30), pow10(-10));
  }
}

TEST(Quadrature, ZIntegralSignFollowsParity) {
  // the integrand (log x)^{m+1} x^{2k} log(1-x) is positive for even m
  EXPECT_TRUE(quad::integrate(quad::IntegralSpec::z_km(1, 2), ctx30) > 0);
  EXPECT_TRUE(quad::integrate(quad::IntegralSpec::z_km(1, 1), ctx30) < 0);
  EXPECT_EQ(z_integral_sign(1), 1);
  EXPECT_EQ(z_integral_sign(2), -1);
}

TEST(Fractions, PositiveAndReduced) {
  for (int k = 1; k <= 20; ++k) {
    const auto ab = fraction_ab(k);
    const auto cd = fraction_cd(k);
    EXPECT_TRUE(ab > 0);
    EXPECT_TRUE(cd > 0);
    EXPECT_EQ(gcd(numerator_of(ab), denominator_of(ab)), 1);
    EXPECT_EQ(gcd(numerator_of(cd), denominator_of(cd)), 1);
  }
}

TEST(Fractions, ConsistentWithOracle) {
  const int k = 2;
  const Real a = 2 * k + 1;
  const Real i_k = oracle_i(k, ctx40).value -
                   (4 * z(6) / a + 4 * z(4) / pow(a, 3) + 4 * z(3) / pow(a, 4) +
                    4 * z(2) / pow(a, 5));
  EXPECT_REAL_NEAR(a * a * i_k, 4 * z(5) - to_real(fraction_ab(k)), pow10(-12));
  EXPECT_REAL_NEAR(a * a * form_eval(i_k_form(k), ctx40), 4 * z(5) - to_real(fraction_ab(k)),
                   pow10(-30));

  const Real j_k = oracle_ii(k, ctx40).value -
                   (Real(63) / 8 * z(6) / a + Real(15) / 2 * z(4) / pow(a, 3) +
                    7 * z(3) / pow(a, 4) + 6 * z(2) / pow(a, 5) + 8 * log(Real(2)) / pow(a, 6));
  EXPECT_REAL_NEAR(4 * a * a * j_k, 31 * z(5) - to_real(fraction_cd(k)), pow10(-12));
}

TEST(Sequences, RecordFields) {
  const auto rec = sequence_record(SequenceFamily::Z_km, 2, 3, ctx30, 10'000);
  EXPECT_EQ(rec.k, 2);
  EXPECT_EQ(rec.m, 3);
  EXPECT_REAL_NEAR(rec.residual, abs(rec.numeric - rec.oracle), Real(0));
  EXPECT_REAL_NEAR(rec.numeric, form_eval(z_km_form(2, 3), ctx30), Real(0));
  EXPECT_TRUE(rec.residual <= pow10(-15));
  EXPECT_EQ(to_string(SequenceFamily::bound_j), "bound_j");
}

TEST(Supremum, AnalyticExample) {
  const auto e = sup_log_power(1, 1, ctx30);
  EXPECT_NEAR(static_cast<double>(e.argmax), 0.7165313106, 1e-10);
  EXPECT_NEAR(static_cast<double>(e.value), 0.1226264804, 1e-10);
  for (int k = 1; k <= 5; ++k) {
    const Real v = sup_log_power(k, 1, ctx30).value;
    const Real a = 2 * k + 1;
    EXPECT_REAL_NEAR(v * v, 1 / (exp(Real(2)) * a * a), pow10(-30));
  }
}

TEST(Supremum, GoldenSectionAgrees) {
  for (int k = 1; k <= 3; ++k) {
    for (int m = 1; m <= 3; ++m) {
      const auto f = [k, m](const Real& x) { return pow(-log(x), m) * pow(x, 2 * k + 1); };
      const auto numeric = golden_section_max(f, pow10(-6), 1 - pow10(-6), ctx30);
      const auto exact = sup_log_power(k, m, ctx30);
      EXPECT_REAL_NEAR(numeric.argmax, exact.argmax, pow10(-8));
      EXPECT_REAL_NEAR(numeric.value, exact.value, pow10(-15));
    }
  }
}

TEST(Supremum, BoundsWeightedIntegral) {
  const Real weighted = abs(quad::integrate(quad::IntegralSpec::z_km(1, 1), ctx30));
  const Real unweighted = abs(quad::integrate(quad::IntegralSpec::theorem21(1), ctx30));
  EXPECT_TRUE(weighted <= sup_log_power(1, 1, ctx30).value * unweighted);
}

TEST(Bounds, ExampleI) {
  const Real expected =
      z(5) + 12 * z(6) + Real(4) / 3 * z(4) + Real(4) / 9 * z(3) + Real(4) / 27 * z(2);
  EXPECT_REAL_NEAR(bound_rhs(BoundFamily::I, 1, 0, ctx40).value, expected, pow10(-35));
}

TEST(Bounds, Trends) {
  EXPECT_TRUE(bound_rhs(BoundFamily::Z, 100, 3, ctx30).value <
              bound_rhs(BoundFamily::Z, 10, 3, ctx30).value);
  EXPECT_TRUE(bound_rhs(BoundFamily::I, 100, 0, ctx30).value >
              bound_rhs(BoundFamily::I, 10, 0, ctx30).value);
  EXPECT_FALSE(bound_rhs(BoundFamily::Z, 1, 3, ctx30).decreased.has_value());
  for (int k = 10; k <= 50; ++k) {
    const auto b = bound_rhs(BoundFamily::Z, k, 3, ctx30);
    ASSERT_TRUE(b.decreased.has_value());
    EXPECT_TRUE(*b.decreased) << "k=" << k;
  }
}

TEST(Bounds, LeftSideBelowRightSide) {
  for (int k = 1; k <= 10; ++k) {
    for (auto fam : {BoundFamily::I, BoundFamily::J, BoundFamily::Z}) {
      const Real lhs = bound_lhs(fam, k, 3, ctx30);
      EXPECT_TRUE(lhs > 0);
      EXPECT_TRUE(lhs <= bound_rhs(fam, k, 3, ctx30).value);
    }
  }
}

TEST(Bounds, TScaledDoesNotVanish) {
  const Real at20 = t_scaled_bound(20, 3, ctx30);
  EXPECT_TRUE(at20 > pow10(80));
  for (int k = 21; k <= 50; ++k) EXPECT_TRUE(t_scaled_bound(k, 3, ctx30) > at20) << "k=" << k;
  EXPECT_TRUE(t_scaled_bound(50, 3, ctx30) > t_scaled_bound(30, 3, ctx30));
}
