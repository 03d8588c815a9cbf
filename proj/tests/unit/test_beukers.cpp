#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetalab/beukers.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab;
using namespace zetalab::beukers;

namespace {

const PrecisionContext ctx30(30);

IntPolynomial poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(v);
}

}  // namespace

TEST(Legendre, SmallDegrees) {
  EXPECT_EQ(legendre_poly(0), poly({1}));
  EXPECT_EQ(legendre_poly(1), poly({1, -2}));
  EXPECT_EQ(legendre_poly(2), poly({1, -6, 6}));
  EXPECT_EQ(legendre_poly(3), poly({1, -12, 30, -20}));
  for (int k = 0; k <= 15; ++k) EXPECT_EQ(legendre_poly(k).degree(), k);
}

TEST(Legendre, ValuesAtEndpoints) {
  for (int k = 0; k <= 12; ++k) {
    const auto p = legendre_poly(k);
    EXPECT_EQ(p(Real(0)), 1);
    EXPECT_EQ(p(Real(1)), k % 2 == 0 ? 1 : -1);
  }
}

TEST(Legendre, Orthogonality) {
  // int_0^1 P_j P_k = delta_jk / (2k+1), computed from exact coefficients
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) {
      BigRational integral = 0;
      const auto a = legendre_poly(j).coeffs();
      const auto b = legendre_poly(k).coeffs();
      for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = 0; q < b.size(); ++q)
          integral += BigRational(BigInt(a[p] * b[q])) / BigInt(p + q + 1);
      EXPECT_EQ(integral, j == k ? BigRational(1, 2 * k + 1) : BigRational(0)) << j << "," << k;
    }
  }
}

TEST(Legendre, MisprintReading) {
  EXPECT_EQ(legendre_poly_misprint(1), poly({1, -2}));
  EXPECT_EQ(legendre_poly_misprint(2), poly({1, 0, -6}));
}

TEST(CellIntegral, Examples) {
  EXPECT_EQ(cell_integral(0, 0), ZetaLinearForm::zeta(3, 2));
  EXPECT_EQ(cell_integral(2, 2),
            ZetaLinearForm::constant(BigRational(-9, 4)) + ZetaLinearForm::zeta(3, 2));
  EXPECT_TRUE(cell_integral(1, 0).is_rational());
  EXPECT_EQ(cell_integral(1, 0), cell_integral(0, 1));
}

TEST(CellIntegral, OffDiagonalAgainstSeries) {
  // sum_n 1/((n+2)^2 (n+1)) + 1/((n+2)(n+1)^2), tail ~ 2/(2 N^2)
  const std::uint64_t terms = 1'000'000;
  Real sum = 0;
  for (std::uint64_t n = terms - 1;; --n) {
    const Real a = Real(n + 2), b = Real(n + 1);
    sum += 1 / (a * a * b) + 1 / (a * b * b);
    if (n == 0) break;
  }
  const Real tail = 1 / (Real(terms) * Real(terms));
  EXPECT_REAL_NEAR(to_real(cell_integral(1, 0).constant_term()), sum + tail, pow10(-15));
}

TEST(CellIntegral, DiagonalDecreases) {
  Real previous = 2 * oracle::zeta_sum(3) + 1;
  for (int r = 0; r <= 10; ++r) {
    const Real value = form_eval(cell_integral(r, r), ctx30);
    EXPECT_TRUE(value > 0);
    EXPECT_TRUE(value < previous);
    EXPECT_TRUE(value <= 2 * oracle::zeta_sum(3) + pow10(-20));
    previous = value;
  }
}

TEST(LinearForm, KEqualsOne) {
  const auto f = beukers_linear_form(1);
  EXPECT_EQ(f.A, -12);
  EXPECT_EQ(f.B, 10);
  EXPECT_REAL_NEAR(form_eval(beukers_integral(1), ctx30), 10 * oracle::zeta_sum(3) - 12,
                   pow10(-25));
  EXPECT_REAL_NEAR(form_eval(beukers_integral(1), ctx30),
                   beukers_quadrature_2d(1, ctx30.with_epsilon(pow10(-15))), pow10(-10));
}

TEST(LinearForm, IntegralityAndBound) {
  for (int k = 1; k <= 12; ++k) {
    const auto f = beukers_linear_form(k);
    const Real value = to_real(f.A) + to_real(f.B) * oracle::zeta3_literal();
    EXPECT_TRUE(value > 0);
    EXPECT_REAL_NEAR(f.magnitude(ctx30), value, pow10(-20));
    EXPECT_TRUE(f.magnitude(ctx30) <= pow(Real(4) / 5, k)) << "k=" << k;
    const Real d = to_real(lcm_seq(k));
    EXPECT_REAL_NEAR(form_eval(beukers_integral(k), ctx30) * d * d * d, f.magnitude(ctx30),
                     pow10(-20));
  }
}

TEST(LinearForm, IntegralStrictlyDecreasing) {
  Real previous = 1;
  for (int k = 1; k <= kMaxLinearFormK; ++k) {
    const Real value = form_eval(beukers_integral(k), ctx30);
    EXPECT_TRUE(value > 0 && value < previous) << "k=" << k;
    previous = value;
  }
}

TEST(LinearForm, CancellationAtLargestK) {
  // the exact form cancels about 3 digits per k; reference from an external
  // 200-digit evaluation
  const auto f = beukers_linear_form(kMaxLinearFormK);
  const Real expected("1.39073104882902274367623429324e-11");
  EXPECT_REAL_NEAR(f.magnitude(ctx30), expected, expected * pow10(-28));
  const Real i30("1.10073958004762968058302006536e-48");
  EXPECT_REAL_NEAR(form_eval(beukers_integral(kMaxLinearFormK), ctx30), i30, i30 * pow10(-28));
}

TEST(LinearForm, Range) {
  EXPECT_THROW(beukers_linear_form(0), DomainError);
  EXPECT_THROW(beukers_linear_form(kMaxLinearFormK + 1), DomainError);
  EXPECT_NO_THROW(beukers_linear_form(kMaxLinearFormK));
}

TEST(LinearForm, MisprintBreaksTheBound) {
  for (int k = 2; k <= 12; ++k) {
    const auto f = linear_form_for(legendre_poly_misprint(k), k);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->magnitude(ctx30) > pow(Real(4) / 5, k)) << "k=" << k;
  }
}

TEST(LinearForm, RejectsUnclearedDenominators) {
  // x^5 needs H_5 terms whose denominators do not divide d_2^3
  EXPECT_FALSE(linear_form_for(poly({0, 0, 0, 0, 0, 1}), 2).has_value());
}

TEST(Lcm, Examples) {
  EXPECT_EQ(lcm_seq(1), 1);
  EXPECT_EQ(lcm_seq(6), 60);
  EXPECT_EQ(lcm_seq(10), 2520);
  const auto table = lcm_table(200);
  ASSERT_EQ(table.size(), 200u);
  BigInt three = 1;
  for (int k = 1; k <= 200; ++k) {
    three *= 3;
    const BigInt& d = table[static_cast<std::size_t>(k - 1)];
    EXPECT_EQ(d, lcm_seq(k));
    EXPECT_LT(d, three) << "k=" << k;
    if (k > 1) {
      const BigInt& prev = table[static_cast<std::size_t>(k - 2)];
      EXPECT_EQ(d % prev, 0);
      const BigInt ratio = d / prev;
      // 1 or the prime whose power k is
      EXPECT_TRUE(ratio == 1 || (k % ratio.convert_to<long>() == 0));
    }
  }
}

TEST(Shrink, SupremumValue) {
  EXPECT_REAL_NEAR(shrink_sup_exact(), pow(sqrt(Real(2)) - 1, 4), pow10(-50));
  EXPECT_NEAR(static_cast<double>(shrink_sup_exact()), 0.0294372515, 1e-10);
  const Real found = shrink_sup_check(200, ctx30);
  EXPECT_REAL_NEAR(found, shrink_sup_exact(), pow10(-6));
  EXPECT_TRUE(found <= shrink_sup_exact() + pow10(-9));
  EXPECT_THROW(shrink_sup_check(99, ctx30), DomainError);
}

TEST(Shrink, VanishesOnFaces) {
  for (double t : {0.0, 0.3, 1.0}) {
    EXPECT_EQ(shrink_ratio(0.0, t, 0.5), 0.0);
    EXPECT_EQ(shrink_ratio(1.0, t, 0.5), 0.0);
    EXPECT_EQ(shrink_ratio(0.5, 0.5, 0.0), 0.0);
    EXPECT_EQ(shrink_ratio(0.5, 0.5, 1.0), 0.0);
  }
}

TEST(InnerZIntegral, ClosesToLogRatio) {
  EXPECT_TRUE(step4_identity_check(Real(0.5), Real(0.5), ctx30) <= pow10(-12));
  EXPECT_TRUE(step4_identity_check(Real(0.9), Real(0.1), ctx30) <= pow10(-12));
  EXPECT_TRUE(step4_identity_check(Real(0.999), Real(0.999), ctx30) <= pow10(-12));
  const Real rhs = -log(Real(0.25)) / Real(0.75);
  EXPECT_NEAR(static_cast<double>(rhs), 1.8483924815, 1e-10);
}

TEST(Routes, TwoAndThreeDimensional) {
  for (int k = 1; k <= 2; ++k) {
    const Real exact = form_eval(beukers_integral(k), ctx30);
    EXPECT_REAL_NEAR(beukers_quadrature_2d(k, ctx30.with_epsilon(pow10(-12))), exact, pow10(-8));
    EXPECT_REAL_NEAR(beukers_quadrature_3d(k, ctx30.with_epsilon(pow10(-10))), exact, pow10(-8));
  }
}
