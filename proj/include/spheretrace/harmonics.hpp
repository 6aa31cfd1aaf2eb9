#pragma once

// Dimensions of harmonic polynomial spaces and concrete harmonic test
// polynomials for the oracles.
//
// H^k(R^N): homogeneous degree-k harmonic polynomials on R^N.
// H^{a,b}(C^n): harmonic polynomials of bidegree (a, b) in (z, conj z),
// with C^n identified with R^{2n} via X = (x, xi), z = x + i xi.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "spheretrace/specfun.hpp"

namespace spheretrace::harmonics {

/// dim H^k(R^N).  N = 1 gives 1 for k <= 1 and 0 beyond.
std::int64_t dim_hk(int N, int k);

/// dim H^{a,b}(C^n).  For n = 1 this is 1 if a*b == 0, else 0.
std::int64_t dim_hab(int n, int alpha, int beta);

/// sum over a+b = k of (-1)^b dim H^{a,b}(C^n).
std::int64_t alternating_sum_D(int n, int k);

/// Coefficients c_j, j = 0..floor(l/2), with
///   x^l + x^{-l} = sum_j c_j (x + 1/x)^{l-2j},  c_j = (-1)^j dim H^j(R^{l+2-2j}).
std::vector<std::int64_t> chebyshev_like_coeffs(int l);

enum class PolynomialKind { Zonal, Bidegree };

struct PolynomialSpec {
  PolynomialKind kind = PolynomialKind::Zonal;
  // Zonal: ambient dimension N, degree, unit axis of length N.
  int N = 0;
  int degree = 0;
  std::vector<double> axis;
  // Bidegree: complex dimension n, bidegree (alpha, beta), 0-based
  // coordinate indices (i, j) for z_i^alpha conj(z_j)^beta, i != j when
  // n >= 2 and both degrees are positive.
  int n = 0;
  int alpha = 0;
  int beta = 0;
  std::array<int, 2> index{0, 1};
};

/// A harmonic homogeneous polynomial on R^dim.
class TestPolynomial {
 public:
  TestPolynomial(PolynomialSpec spec, std::function<Complex(std::span<const double>)> eval, int dim,
                 int degree);

  const PolynomialSpec& spec() const { return spec_; }
  int dimension() const { return dim_; }
  int degree() const { return degree_; }

  /// Real part of the polynomial (the polynomial itself for zonal ones).
  double value(std::span<const double> x) const { return eval_(x).real(); }
  Complex complex_value(std::span<const double> x) const { return eval_(x); }

 private:
  PolynomialSpec spec_;
  std::function<Complex(std::span<const double>)> eval_;
  int dim_;
  int degree_;
};

/// Throws DomainError for invalid specs.
TestPolynomial make_test_polynomial(const PolynomialSpec& spec);

/// Zonal degree-k harmonic in dimension N, normalized to 1 at the axis:
/// evaluated by the three-term recurrence in t = <x, axis> and r^2 = |x|^2.
double zonal_value(int N, int k, double t, double r2);

}  // namespace spheretrace::harmonics
