#include <gtest/gtest.h>

#include <cmath>

#include "spheretrace/oracle.hpp"
#include "spheretrace/rng.hpp"
#include "spheretrace/spectra.hpp"

using namespace spheretrace;
using namespace spheretrace::oracle;

namespace {

constexpr double kPi3 = kPi * kPi * kPi;

}  // namespace

TEST(Philox, KnownAnswerVectors) {
  EXPECT_EQ(rng::philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (rng::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(rng::philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (rng::Block{0xd16cfe09u, 0x94fdcceb, 0x5001e420u, 0x24126ea1u}));
}

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
  rng::CounterRng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
    EXPECT_NE(x, d.next_u64());
  }
}

TEST(CounterRng, UniformAndNormalMoments) {
  rng::CounterRng g(7, 3);
  double s = 0, s2 = 0, n1 = 0, n2 = 0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double u = g.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_GT(g.uniform_open(), 0.0);
    s += u;
    s2 += u * u;
    const double z = g.normal();
    n1 += z;
    n2 += z * z;
  }
  EXPECT_NEAR(s / count, 0.5, 0.005);
  EXPECT_NEAR(s2 / count, 1.0 / 3.0, 0.005);
  EXPECT_NEAR(n1 / count, 0.0, 0.01);
  EXPECT_NEAR(n2 / count, 1.0, 0.01);
}

TEST(Sphere, SamplesAreUnitVectors) {
  rng::CounterRng g(1, 0);
  for (int N : {1, 2, 3, 7}) {
    for (int i = 0; i < 100; ++i) {
      const auto p = sample_sphere(N, g);
      double r2 = 0;
      for (double c : p.coords) r2 += c * c;
      EXPECT_NEAR(r2, 1.0, 1e-14);
    }
  }
}

TEST(SymplecticForm, MatchesComplexStructure) {
  rng::CounterRng g(2, 0);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 50; ++i) {
      const auto X = sample_sphere(2 * n, g), Y = sample_sphere(2 * n, g);
      EXPECT_NEAR(symplectic_form(X, Y), symplectic_form_via_J(X, Y), 1e-15);
      EXPECT_NEAR(symplectic_form(X, Y), -symplectic_form(Y, X), 1e-15);
      EXPECT_NEAR(symplectic_form(X, X), 0.0, 1e-15);
    }
  }
}

TEST(Torus, ExactCircleIntegrals) {
  EXPECT_NEAR(torus_quadrature_triple(OperatorKind::symplectic(1), 64, {2, 2, 2}), 0.75 * kPi3, 1e-10 * kPi3);
  EXPECT_NEAR(torus_quadrature_triple(OperatorKind::distance(1), 64, {2, 2, 2}), 48.0 * kPi3, 1e-10 * kPi3);
  EXPECT_NEAR(torus_quadrature_triple(OperatorKind::inner_product(2), 128, {0, 0, 0}), 8.0 * kPi3, 1e-12 * kPi3);
  EXPECT_THROW(torus_quadrature_triple(OperatorKind::distance(2), 64, {2, 2, 2}), DomainError);
  EXPECT_THROW(torus_quadrature_triple(OperatorKind::distance(1), 100, {2, 2, 2}), DomainError);
  EXPECT_THROW(torus_quadrature_triple(OperatorKind::distance(1), 64, {1, 2, 2}), DomainError);
}

TEST(MonteCarlo, DeterministicGivenSeedAndShards) {
  const KernelSpec k{OperatorKind::symplectic(1), {2.0, 2.0, 2.0}};
  const auto a = mc_triple(k, 20000, 5, 4);
  const auto b = mc_triple(k, 20000, 5, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_NE(a.mean, mc_triple(k, 20000, 6, 4).mean);
  EXPECT_EQ(a.samples, 20000u);
}

TEST(MonteCarlo, SymplecticTripleWithinThreeSigma) {
  const auto est = mc_triple({OperatorKind::symplectic(1), {2.0, 2.0, 2.0}}, 400000, 11);
  EXPECT_LT(std::abs(est.mean - 0.75 * kPi3), 3.0 * est.std_error);
}

TEST(MonteCarlo, Refusals) {
  EXPECT_THROW(mc_triple({OperatorKind::symplectic(2), {-1.0, 0.0, 0.0}}, 1000, 1), DomainError);
  EXPECT_THROW(mc_triple({OperatorKind::symplectic(2), {-0.6, 0.0, 0.0}}, 1000, 1), DomainError);
  harmonics::PolynomialSpec s;
  s.N = 2;
  s.degree = 2;
  s.axis = {1.0, 0.0};
  const auto p = harmonics::make_test_polynomial(s);
  // Re z^2 at angle pi/4 vanishes.
  const double r = std::sqrt(0.5);
  EXPECT_THROW(mc_multiplier({OperatorKind::symplectic(1), {2.0}}, p, {{r, r}}, 1000, 1), DomainError);
}

TEST(MonteCarlo, ConstantKernelIsSphereVolume) {
  harmonics::PolynomialSpec s;
  s.N = 4;
  s.degree = 0;
  s.axis = {1.0, 0.0, 0.0, 0.0};
  const auto p = harmonics::make_test_polynomial(s);
  const auto est = mc_apply_operator({OperatorKind::inner_product(4), {0.0}}, p, {{1.0, 0.0, 0.0, 0.0}}, 5000, 1);
  EXPECT_NEAR(est.mean, spectra::sphere_volume(4), 1e-12);
}

TEST(MonteCarlo, DistanceMultiplierMatchesFunkHecke) {
  harmonics::PolynomialSpec s;
  s.N = 3;
  s.degree = 1;
  s.axis = {0.0, 0.0, 1.0};
  const auto p = harmonics::make_test_polynomial(s);
  const auto est = mc_multiplier({OperatorKind::distance(2), {2.0}}, p, {{0.6, 0.0, 0.8}}, 400000, 3);
  const double expected = spectra::distance_multiplier_funk_hecke(2, 1, -4.0).value().real();
  EXPECT_LT(std::abs(est.mean - expected), 3.0 * est.std_error);
}

TEST(Gaussian, PairingAgreesWithClosedForm) {
  for (double lambda : {-0.25, -0.5, -0.75, -0.1}) {
    const auto [lhs, rhs] = gaussian_pairing_check(lambda);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::abs(rhs));
  }
  EXPECT_NEAR(gaussian_moment_quadrature(0.0), 1.0, 1e-12);
  EXPECT_NEAR(gaussian_moment_quadrature(2.0), 1.0 / (2.0 * kPi), 1e-12);
  EXPECT_THROW(gaussian_pairing_check(0.5), DomainError);
}
