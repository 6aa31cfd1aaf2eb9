#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spheretrace/spectra.hpp"
#include "spheretrace/triple.hpp"

using namespace spheretrace;
using namespace spheretrace::triple;

namespace {

constexpr double kPi3 = kPi * kPi * kPi;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(ClosedSymplectic, DeskValue) {
  const ParamSet p = params_from_lambda(OperatorKind::symplectic(1), {-5.0, -5.0, -5.0});
  EXPECT_NEAR(closed_symplectic(p).value().real(), 0.75 * kPi3, 1e-12 * kPi3);
  EXPECT_NEAR(trace_closed_T(1, {-3.0, -3.0, -3.0}).value().real(), 0.75 * kPi3, 1e-12 * kPi3);
}

TEST(ClosedSymplectic, LoneDenominatorPoleIsZero) {
  // lambda_1 = n + 2 puts Gamma((n - lambda_1)/2) = Gamma(-1) in the denominator.
  const ParamSet p = params_from_lambda(OperatorKind::symplectic(1), {3.0, -5.3, -5.7});
  EXPECT_TRUE(closed_symplectic(p).is_zero());
}

TEST(ClosedSymplectic, MatchesTraceFormProperty) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-8.0, -2.0), v(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    const Triple mu{Complex(u(gen), v(gen)), Complex(u(gen), v(gen)), Complex(u(gen), v(gen))};
    const ParamSet p = params_from_mu(OperatorKind::symplectic(n), mu);
    EXPECT_LT(rel(closed_symplectic(p).value(), trace_closed_T(n, mu).value()), 1e-12);
  }
}

TEST(TraceSeries, SymplecticAgreesWithClosedForm) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> u(-8.0, -3.0);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 3;
    const Triple mu{Complex(u(gen), 0.2), Complex(u(gen), -0.1), Complex(u(gen), 0.0)};
    const auto s = trace_series(OperatorKind::symplectic(n), mu);
    ASSERT_TRUE(s.converged);
    EXPECT_LT(rel(s.value, trace_closed_T(n, mu).value()), 1e-8);
    EXPECT_LT(rel(trace_dougall_assembly(n, mu).value(), trace_closed_T(n, mu).value()), 1e-8);
  }
}

TEST(TraceSeries, SlowTailIsAccelerated) {
  // Tail exponent -(n + sum mu) = 0.6: plain partial sums would need ~1e20 terms.
  const Triple mu{-0.55, -0.55, -0.5};
  const auto s = trace_series(OperatorKind::symplectic(1), mu, 1e-10);
  EXPECT_TRUE(s.converged);
  EXPECT_LT(rel(s.value, trace_closed_T(1, mu).value()), 1e-6);
}

TEST(TraceSeries, DivergentRegionRefused) {
  EXPECT_THROW(trace_series(OperatorKind::symplectic(1), {-0.3, -0.3, -0.3}), DomainError);
  EXPECT_THROW(trace_series(OperatorKind::distance(2), {-0.5, -0.5, -0.5}), DomainError);
}

TEST(TraceSeries, InnerConstantKernelTerminates) {
  for (int N = 2; N <= 5; ++N) {
    const double v = spectra::sphere_volume(N);
    const auto s = trace_series(OperatorKind::inner_product(N), {-N / 2.0, -N / 2.0, -N / 2.0});
    EXPECT_NEAR(s.value.real(), v * v * v, 1e-12 * v * v * v);
    EXPECT_EQ(s.terms_used, 1u);
  }
}

TEST(Distance, PrintedDeskValueAndConsistentForm) {
  const ParamSet p = params_from_lambda(OperatorKind::distance(1), {-5.0, -5.0, -5.0});
  EXPECT_NEAR(closed_distance_printed(p).value().real(), 0.75 * std::pow(kPi, 1.5), 1e-12);
  EXPECT_NEAR(closed_distance_consistent(p).value().real(), 48.0 * kPi3, 1e-10 * kPi3);
}

TEST(Distance, SeriesVariantsMatchTheirClosedForms) {
  const Triple mu{-4.0, -4.0, -4.0};
  const ParamSet p = params_from_mu(OperatorKind::distance(2), mu);
  const auto fh = trace_series(OperatorKind::distance(2), mu);
  const auto printed = trace_series(OperatorKind::distance(2), mu, 1e-12, 100000, DistanceVariant::Printed);
  EXPECT_NEAR(fh.value.real(), 4096.0 * kPi3 / 9.0, 1e-10 * kPi3);
  EXPECT_LT(rel(printed.value, closed_distance_printed(p).value()), 1e-10);
  EXPECT_LT(rel(comparison_constant(2, mu).value() * trace_closed_T(2, mu).value(), closed_distance_printed(p).value()),
            1e-12);
}

TEST(Inner, PrintedAndConsistentDifferByPiCubed) {
  for (int N = 3; N <= 5; ++N) {
    const double v = spectra::sphere_volume(N);
    const auto printed = closed_inner_printed(N, {0.0, 0.0, 0.0});
    EXPECT_NEAR(printed.value.value().real() * kPi3, v * v * v, 1e-10 * v * v * v);
  }
  const Triple mu{-2.6, -2.9, -3.4};
  const ParamSet p = params_from_mu(OperatorKind::inner_product(4), mu);
  const auto series = trace_series(OperatorKind::inner_product(4), mu);
  const auto consistent = closed_inner_consistent(4, mu);
  const auto printed = closed_inner_printed(4, p.nu);
  EXPECT_LT(rel(series.value, consistent.value.value()), 1e-8);
  EXPECT_LT(rel(consistent.value.value(), printed.value.value() * kPi3), 1e-10);
}

TEST(TraceReport, CollectsEverything) {
  const ParamSet p = params_from_mu(OperatorKind::distance(2), {-4.0, -4.0, -4.0});
  const auto rep = trace_report(p);
  ASSERT_TRUE(rep.series_printed.has_value());
  ASSERT_TRUE(rep.ratio.has_value());
  ASSERT_TRUE(rep.series_rel_error.has_value());
  EXPECT_LT(*rep.series_rel_error, 1e-10);
}

TEST(Region, SymplecticBoundaries) {
  const auto S = OperatorKind::symplectic;
  EXPECT_TRUE(region_check(params_from_exponents(S(2), {-0.999, 0.0, 0.0})).convergent);
  EXPECT_FALSE(region_check(params_from_exponents(S(2), {-1.0, 0.0, 0.0})).convergent);
  EXPECT_FALSE(region_check(params_from_exponents(S(1), {-0.5, -0.75, -0.75})).convergent);
  EXPECT_TRUE(region_check(params_from_exponents(S(1), {-0.5, -0.75, -0.749})).convergent);
  EXPECT_TRUE(region_check(params_from_exponents(S(2), {-0.9, -0.9, -0.9})).convergent);
}

TEST(Region, DistanceAndInnerBoundaries) {
  const auto D = OperatorKind::distance(3);
  EXPECT_FALSE(region_check(params_from_exponents(D, {-3.0, 1.0, 1.0})).convergent);
  EXPECT_TRUE(region_check(params_from_exponents(D, {-2.9, 1.0, 1.0})).convergent);
  EXPECT_FALSE(region_check(params_from_exponents(D, {-2.0, -2.0, -2.0})).convergent);
  EXPECT_TRUE(region_check(params_from_exponents(D, {-2.0, -2.0, -1.99})).convergent);
  const auto I = OperatorKind::inner_product(4);
  EXPECT_FALSE(region_check(params_from_exponents(I, {0.0, -1.0, 0.0})).convergent);
  EXPECT_TRUE(region_check(params_from_exponents(I, {-0.99, -0.99, -0.99})).convergent);
  EXPECT_FALSE(region_check(params_from_exponents(I, {0.0, 0.0, 0.0})).abgd_form.has_value());
}

TEST(Region, TwoSymplecticFormsAgreeProperty) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(-1.5, 1.0), v(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 3;
    const auto rep = region_check(
        params_from_exponents(OperatorKind::symplectic(n), {Complex(u(gen), v(gen)), u(gen), u(gen)}));
    ASSERT_TRUE(rep.abgd_form.has_value());
    EXPECT_EQ(*rep.abgd_form, rep.convergent);
  }
}
