#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spheretrace/hyper.hpp"
#include "spheretrace/series.hpp"

using namespace spheretrace;
using namespace spheretrace::hyper;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(SumSeries, BaselSlowTail) {
  TailModel tail;
  tail.kind = TailKind::Algebraic;
  tail.exponent = 1.0;
  const auto r = sum_series([](std::size_t k) { return Complex(1.0 / ((k + 1.0) * (k + 1.0))); }, tail, std::nullopt,
                            SeriesOptions{});
  EXPECT_TRUE(r.converged);
  EXPECT_LT(std::abs(r.value.real() - kPi * kPi / 6.0), 1e-10);
  EXPECT_LT(r.terms_used, 10000u);
}

TEST(SumSeries, TerminatesAtLastIndex) {
  const auto r = sum_series([](std::size_t k) { return Complex(static_cast<double>(k)); }, TailModel{}, 4, SeriesOptions{});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, Complex(10.0));
}

TEST(Pfq, LogTwoAtMinusOne) {
  const auto r = pfq({{1.0, 1.0}, {2.0}, -1.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), std::log(2.0), 1e-10);
}

TEST(Pfq, GeometricInsideDisk) {
  // 1F0(a;;z) = (1-z)^{-a}
  const auto r = pfq({{0.7}, {}, Complex(0.3, 0.2)});
  EXPECT_LT(rel(r.value, std::pow(Complex(0.7, -0.2), -0.7)), 1e-12);
}

TEST(Pfq, GaussSummation) {
  // 2F1(a,b;c;1) = G(c)G(c-a-b)/(G(c-a)G(c-b))
  const double a = 0.3, b = -0.4, c = 1.7;
  const auto r = pfq({{a, b}, {c}, 1.0});
  const double expected = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
  EXPECT_LT(std::abs(r.value.real() - expected) / expected, 1e-9);
}

TEST(Pfq, TruncatingUpperParameter) {
  const auto zero = pfq({{0.0, 3.5}, {1.5}, 1.0});
  EXPECT_EQ(zero.value, Complex(1.0));
  EXPECT_EQ(truncation_degree({{-3.0, 1.0}, {0.5}, 1.0}), std::optional<std::size_t>(3));
  // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  const auto r = pfq({{-4.0, 1.3}, {2.1}, 1.0});
  EXPECT_LT(rel(r.value, pochhammer(0.8, 4) / pochhammer(2.1, 4)), 1e-13);
}

TEST(Pfq, Refusals) {
  EXPECT_THROW(pfq({{1.0, 1.0}, {2.0}, 1.0}), DomainError);       // excess 0
  EXPECT_THROW(pfq({{1.0}, {-2.0}, 0.5}), DomainError);            // lower pole
  EXPECT_NO_THROW(pfq({{-1.0}, {-2.0}, 0.5}));                     // truncates first
  EXPECT_THROW(pfq({{1.0, 1.0}, {2.0}, 1.5}), DomainError);       // outside the disk
}

TEST(WellPoised, Criterion) {
  EXPECT_TRUE(is_well_poised(dougall_series_params(2.3, -0.2, -0.4, -0.6)));
  EXPECT_FALSE(is_well_poised({{1.0, 2.0, 3.0}, {1.0, 1.0}, 1.0}));
  EXPECT_THROW(is_well_poised({{1.0}, {1.0}, 1.0}), std::invalid_argument);
}

TEST(Dougall, PiSquaredOverEight) {
  const MeroValue v = dougall_rhs(2.0, -0.5, -0.5, -0.5);
  ASSERT_TRUE(v.is_finite());
  EXPECT_NEAR(v.value().real(), kPi * kPi / 8.0, 1e-13);
  const auto s = pfq(dougall_series_params(2.0, -0.5, -0.5, -0.5));
  EXPECT_LT(std::abs(s.value.real() - kPi * kPi / 8.0), 1e-8);
}

TEST(Dougall, RandomDrawsProperty) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> m(1.0, 3.0), xyz(-0.9, -0.1);
  int done = 0;
  while (done < 40) {
    const double mm = m(gen), x = xyz(gen), y = xyz(gen), z = xyz(gen);
    const HyperParams hp = dougall_series_params(mm, x, y, z);
    if (convergence_excess(hp).real() <= 0.5) continue;
    ++done;
    EXPECT_LT(rel(pfq(hp).value, dougall_rhs(mm, x, y, z).value()), 1e-8);
  }
}

TEST(Whipple, RandomDrawsProperty) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> a(0.5, 3.0), p(-0.5, 1.0);
  int done = 0;
  while (done < 25) {
    const double aa = a(gen), b = p(gen), c = p(gen), d = p(gen), e = p(gen);
    const HyperParams lhs = whipple_series_params(aa, b, c, d, e);
    if (convergence_excess(lhs).real() <= 0.5 || 1.0 + aa - d - e <= 0.5) continue;
    ++done;
    EXPECT_LT(rel(pfq(lhs).value, whipple_rhs(aa, b, c, d, e).value), 1e-8);
  }
}

TEST(Whipple, DegenerateParameters) {
  EXPECT_NEAR(whipple_rhs(1.3, 0.2, 0.4, 0.3, 0.0).value.real(), 1.0, 1e-14);
  EXPECT_NEAR(pfq(whipple_series_params(1.3, 0.2, 0.4, 0.3, 0.0)).value.real(), 1.0, 1e-14);
}
