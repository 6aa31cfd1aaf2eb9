#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spheretrace/params.hpp"
#include "spheretrace/spectra.hpp"

using namespace spheretrace;
using namespace spheretrace::spectra;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Complex val(const MeroValue& v) { return v.value(); }

}  // namespace

TEST(Params, LambdaToEverything) {
  const ParamSet p = params_from_lambda(OperatorKind::symplectic(1), {-5.0, -5.0, -5.0});
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(p.mu[j].real(), -3.0, 1e-14);
    EXPECT_NEAR(p.exponents[j].real(), 2.0, 1e-14);
    EXPECT_NEAR(p.abgd[j].real(), 5.0, 1e-14);
  }
  EXPECT_NEAR(p.abgd[3].real(), 15.0, 1e-14);
}

TEST(Params, RoundTripProperty) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(-6.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const OperatorKind kinds[] = {OperatorKind::symplectic(1 + i % 3), OperatorKind::distance(1 + i % 4),
                                  OperatorKind::inner_product(2 + i % 5)};
    const OperatorKind kind = kinds[i % 3];
    const Triple lambda{Complex(u(gen), u(gen)), Complex(u(gen), 0.0), Complex(u(gen), -0.5)};
    const ParamSet p = params_from_lambda(kind, lambda);
    for (const ParamSet& q : {params_from_mu(kind, p.mu), params_from_exponents(kind, p.exponents)}) {
      for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(q.lambda[j] - lambda[j]), 1e-12);
    }
    ParamInput in;
    in.kind = kind;
    in.abg = Triple{p.abgd[0], p.abgd[1], p.abgd[2]};
    in.delta = p.abgd[3];
    in.nu = p.nu;
    const ParamSet r = param_convert(in);
    for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(r.mu[j] - p.mu[j]), 1e-12);
  }
}

TEST(Params, Inconsistencies) {
  ParamInput in;
  in.kind = OperatorKind::symplectic(1);
  EXPECT_THROW(param_convert(in), ValidationError);
  in.lambda = Triple{-5.0, -5.0, -5.0};
  in.mu = Triple{-3.0, -3.0, -2.0};
  EXPECT_THROW(param_convert(in), ValidationError);
  in.mu.reset();
  in.delta = 14.0;
  EXPECT_THROW(param_convert(in), ValidationError);
  in.delta = 15.0;
  EXPECT_NO_THROW(param_convert(in));
  EXPECT_THROW(params_from_mu(OperatorKind::distance(0), {-1.0, -1.0, -1.0}), ValidationError);
}

TEST(Symplectic, SpecValues) {
  EXPECT_NEAR(val(symplectic_multiplier(1, 0, -3.0)).real(), kPi, 1e-13);
  EXPECT_NEAR(val(symplectic_multiplier(1, 2, -3.0)).real(), -kPi / 2.0, 1e-13);
  for (int k : {1, 3, 5}) EXPECT_TRUE(symplectic_multiplier(2, k, Complex(-2.7, 0.3)).is_zero());
  for (int n = 1; n <= 4; ++n)
    EXPECT_NEAR(val(symplectic_multiplier(n, 0, -n - 2.0)).real(), std::pow(kPi, n) / std::tgamma(n + 1.0), 1e-12);
  EXPECT_NEAR(val(bidegree_eigenvalue(2, 1, 1, -4.0)).real(), kPi * kPi / 6.0, 1e-13);
}

TEST(Symplectic, RatioRecurrenceProperty) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(-7.3, 1.7);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 4, l = i % 9;
    const Complex mu(u(gen), 0.37);
    const Complex ratio = val(symplectic_multiplier(n, 2 * l + 2, mu)) / val(symplectic_multiplier(n, 2 * l, mu));
    const double nd = n, ld = l;
    EXPECT_LT(rel(ratio, (ld + (nd + mu) / 2.0) / (ld + (nd - mu) / 2.0)), 1e-11);
  }
}

TEST(Fourier, BochnerInversionProperty) {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-4.7, 2.3);
  for (int i = 0; i < 200; ++i) {
    const int N = 1 + i % 6;
    const Complex lambda(u(gen), 0.21);
    const MeroValue a = fourier_homogeneous_constant(N, lambda, 0);
    const MeroValue b = fourier_homogeneous_constant(N, -lambda - static_cast<double>(N), 0);
    EXPECT_LT(std::abs((a * b).value() - 1.0), 1e-10);
  }
  EXPECT_NEAR(val(fourier_homogeneous_constant(1, -0.5, 0)).real(), 1.0, 1e-14);
}

TEST(Fourier, InnerConstantForms) {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> u(-5.3, 1.2);
  for (int i = 0; i < 100; ++i) {
    const int N = 2 + i % 5;
    const Complex mu(u(gen), -0.4);
    EXPECT_LT(rel(inner_fourier_constant_cosine_form(N, mu), val(inner_fourier_constant(N, mu))), 1e-11);
  }
}

TEST(Factorization, SymplecticThroughFourier) {
  std::mt19937_64 gen(15);
  std::uniform_real_distribution<double> u(-6.6, 1.4);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 3, a = i % 5, b = (i / 5) % 5 + ((i % 5 + (i / 5) % 5) % 2);
    const Complex mu(u(gen), 0.5);
    const double sign = ((a - b) / 2) % 2 == 0 ? 1.0 : -1.0;
    const Complex lhs =
        sign * val(inner_fourier_constant(2 * n, mu)) * val(fourier_homogeneous_constant(2 * n, mu - static_cast<double>(n), a + b));
    EXPECT_LT(rel(lhs, val(bidegree_eigenvalue(n, a, b, mu))), 1e-10);
  }
}

TEST(Distance, SpecColumns) {
  EXPECT_NEAR(val(distance_multiplier_printed(2, 0, -2.0)).real(), 1.5, 1e-13);
  EXPECT_NEAR(val(distance_multiplier_funk_hecke(2, 0, -2.0)).real(), 4.0 * kPi, 1e-12);
  EXPECT_NEAR(val(distance_multiplier_funk_hecke(2, 1, -4.0)).real(), -8.0 * kPi / 3.0, 1e-12);
}

TEST(Distance, PrintedOverFunkHeckeIsConstant) {
  std::mt19937_64 gen(16);
  std::uniform_real_distribution<double> u(-6.7, -0.2);
  for (int m = 1; m <= 4; ++m) {
    const double expected = std::tgamma(m + 0.5) / (2.0 * std::pow(kPi, (m + 1) / 2.0));
    for (int i = 0; i < 30; ++i) {
      const Complex mu(u(gen), 0.1);
      const int k = i % 8;
      EXPECT_LT(rel(val(distance_multiplier_printed(m, k, mu)) / val(distance_multiplier_funk_hecke(m, k, mu)), expected),
                1e-10);
    }
  }
}

TEST(Distance, RatiosToSymplectic) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-6.7, -0.2);
  for (int i = 0; i < 50; ++i) {
    const int m = 1 + i % 3, k = i % 6;
    const Complex mu(u(gen), 0.3);
    const Complex a = val(symplectic_multiplier(m, 2 * k, mu));
    EXPECT_LT(rel(val(distance_multiplier_printed(m, k, mu)) / a, val(distance_to_symplectic_ratio(m, mu))), 1e-10);
    EXPECT_LT(rel(val(distance_multiplier_funk_hecke(m, k, mu)) / a, val(funk_hecke_to_symplectic_ratio(m, mu))), 1e-10);
  }
}

TEST(Inner, ConstantKernelPoint) {
  for (int N = 2; N <= 6; ++N) {
    EXPECT_NEAR(val(inner_multiplier(N, 0, -N / 2.0)).real(), sphere_volume(N), 1e-12 * sphere_volume(N));
    EXPECT_TRUE(inner_multiplier(N, 1, -N / 2.0).is_zero());
    EXPECT_TRUE(inner_multiplier_degree(N, 3, -1.3).is_zero());
  }
  EXPECT_NEAR(val(inner_multiplier(3, 0, -1.5)).real(), 4.0 * kPi, 1e-12);
  EXPECT_NEAR(sphere_volume(2), 2.0 * kPi, 1e-14);
}

TEST(Cutoffs, PolynomialKernels) {
  // Polynomial kernels have finitely many nonzero multipliers.
  EXPECT_TRUE(symplectic_cutoff(1, -3.0).has_value());
  EXPECT_FALSE(symplectic_cutoff(1, -3.3).has_value());
  EXPECT_TRUE(inner_cutoff(3, -1.5).has_value());
  EXPECT_TRUE(distance_cutoff(2, -4.0).has_value());
}
