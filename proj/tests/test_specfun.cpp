#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spheretrace/specfun.hpp"

using namespace spheretrace;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Gamma, IntegerAndHalfInteger) {
  EXPECT_NEAR(gamma(Complex(4.0)).real(), 6.0, 1e-13);
  EXPECT_NEAR(gamma(Complex(0.5)).real(), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(gamma(Complex(-0.5)).real(), -2.0 * std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(gamma(Complex(1.0)).real(), 1.0, 1e-15);
}

TEST(Gamma, ModulusOnImaginaryAxis) {
  const Complex g = gamma(Complex(0.0, 1.0));
  EXPECT_NEAR(std::norm(g), kPi / std::sinh(kPi), 1e-14);
}

TEST(Gamma, PolesThrow) {
  EXPECT_TRUE(is_gamma_pole(Complex(0.0)));
  EXPECT_TRUE(is_gamma_pole(Complex(-3.0)));
  EXPECT_FALSE(is_gamma_pole(Complex(-3.0, 1e-3)));
  EXPECT_FALSE(is_gamma_pole(Complex(1.0)));
  EXPECT_THROW(log_gamma(Complex(-2.0)), DomainError);
}

TEST(Gamma, RecurrenceProperty) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> re(-9.5, 9.5), im(-6.0, 6.0);
  for (int i = 0; i < 500; ++i) {
    const Complex z(re(gen), im(gen));
    if (is_gamma_pole(z, 1e-3)) continue;
    EXPECT_LT(rel(gamma(z + 1.0), z * gamma(z)), 1e-12) << z;
  }
}

TEST(Gamma, ReflectionProperty) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> re(-4.0, 4.0), im(-3.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    const Complex z(re(gen), im(gen));
    if (is_gamma_pole(z, 1e-3) || is_gamma_pole(1.0 - z, 1e-3)) continue;
    EXPECT_LT(rel(gamma(z) * gamma(1.0 - z), kPi / sin_pi(z)), 1e-12) << z;
  }
}

TEST(SinPi, ExactAtIntegers) {
  EXPECT_EQ(sin_pi(Complex(3.0)), Complex(0.0));
  EXPECT_NEAR(sin_pi(Complex(0.5)).real(), 1.0, 1e-16);
  EXPECT_NEAR(sin_pi(Complex(1e6 + 0.5)).real(), 1.0, 1e-12);
}

TEST(Pochhammer, MatchesGammaRatio) {
  EXPECT_EQ(pochhammer(Complex(3.0), 0), Complex(1.0));
  EXPECT_NEAR(pochhammer(Complex(3.0), 4).real(), 360.0, 1e-12);
  const Complex a(0.3, -1.2);
  EXPECT_LT(rel(pochhammer(a, 7), gamma(a + 7.0) / gamma(a)), 1e-12);
}

TEST(GammaRatio, FiniteProduct) {
  const MeroValue v = eval_gamma_ratio({{Complex(5.0)}, {Complex(3.0)}, Complex(2.0)});
  ASSERT_TRUE(v.is_finite());
  EXPECT_NEAR(v.value().real(), 24.0, 1e-12);
}

TEST(GammaRatio, PolePairCancels) {
  // Gamma(0) / Gamma(-1) -> -1 as both arguments shift together.
  const MeroValue v = eval_gamma_ratio({{Complex(0.0)}, {Complex(-1.0)}, Complex(1.0)});
  ASSERT_TRUE(v.is_finite());
  EXPECT_NEAR(v.value().real(), -1.0, 1e-14);
  const MeroValue w = eval_gamma_ratio({{Complex(-3.0)}, {Complex(-1.0)}, Complex(1.0)});
  ASSERT_TRUE(w.is_finite());
  EXPECT_NEAR(w.value().real(), 1.0 / 6.0, 1e-14);
}

TEST(GammaRatio, UnmatchedPoles) {
  EXPECT_TRUE(eval_gamma_ratio({{Complex(-2.0)}, {Complex(1.5)}, Complex(1.0)}).is_pole());
  EXPECT_TRUE(eval_gamma_ratio({{Complex(1.5)}, {Complex(-2.0)}, Complex(1.0)}).is_zero());
  EXPECT_TRUE(eval_gamma_ratio({{Complex(-1.0), Complex(-2.0)}, {Complex(0.0)}, Complex(1.0)}).is_pole());
}

TEST(MeroValue, Arithmetic) {
  const MeroValue two = MeroValue::finite(2.0);
  EXPECT_TRUE((two * MeroValue::zero()).is_zero());
  EXPECT_TRUE((two * MeroValue::pole()).is_pole());
  EXPECT_TRUE((two / MeroValue::zero()).is_pole());
  EXPECT_TRUE((MeroValue::zero() / two).is_zero());
  EXPECT_THROW(MeroValue::zero() * MeroValue::pole(), DomainError);
  EXPECT_THROW(MeroValue::pole().value(), DomainError);
  EXPECT_EQ(MeroValue::zero().value(), Complex(0.0));
  EXPECT_NEAR((two * Complex(0.0, 1.5)).value().imag(), 3.0, 0.0);
}
