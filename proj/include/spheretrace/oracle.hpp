#pragma once

// Brute-force ground truth: Monte Carlo over spheres, deterministic torus
// quadrature for circles, and a 1-D Fourier pairing against the Gaussian.
// All sphere integrals use the unnormalized surface measure.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spheretrace/harmonics.hpp"
#include "spheretrace/params.hpp"
#include "spheretrace/rng.hpp"

namespace spheretrace::oracle {

struct SpherePoint {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  std::span<const double> span() const { return coords; }
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  std::string note;  // e.g. a variance warning for singular kernels
};

/// Kernel |K(.,.)|^e of the given kind, with one exponent per pair
/// (triple integrals) or a single exponent (operator application).
struct KernelSpec {
  OperatorKind kind;
  std::vector<double> exponents;

  /// All exponents are even nonnegative integers.
  bool is_polynomial() const;
};

inline constexpr int kDefaultShards = 8;

/// Uniform point on S^{N-1} from a normalized Gaussian vector.
SpherePoint sample_sphere(int N, rng::CounterRng& gen);

/// [X, Y] = -<x, eta> + <y, xi> for X = (x, xi), Y = (y, eta) in R^n + R^n.
double symplectic_form(const SpherePoint& X, const SpherePoint& Y);
/// <X, J Y> with J(y, eta) = (-eta, y).
double symplectic_form_via_J(const SpherePoint& X, const SpherePoint& Y);

/// |[X,Y]|, |X - Y| or |<X,Y>| according to the kind.
double pair_kernel(const OperatorKind& kind, std::span<const double> X, std::span<const double> Y);

/// vol(S)^3 * E[|K(Y,Z)|^{e1} |K(Z,X)|^{e2} |K(X,Y)|^{e3}].
MCEstimate mc_triple(const KernelSpec& kernel, std::uint64_t samples, std::uint64_t seed,
                     int shards = kDefaultShards);

/// vol(S) * E[p(w) |K(w, eta)|^{e}]: the operator with kernel exponent e
/// applied to p, evaluated at eta.
MCEstimate mc_apply_operator(const KernelSpec& kernel, const harmonics::TestPolynomial& p, const SpherePoint& eta,
                             std::uint64_t samples, std::uint64_t seed, int shards = kDefaultShards);

/// mc_apply_operator divided by p(eta).  Throws DomainError if |p(eta)| <= 0.1.
MCEstimate mc_multiplier(const KernelSpec& kernel, const harmonics::TestPolynomial& p, const SpherePoint& eta,
                         std::uint64_t samples, std::uint64_t seed, int shards = kDefaultShards);

/// Trapezoid rule on the 2-torus for circle triple integrals (symplectic
/// n = 1, distance m = 1, inner N = 2) with even nonnegative exponents;
/// exact once n_grid exceeds the trigonometric bandwidth.
double torus_quadrature_triple(const OperatorKind& kind, int n_grid, const std::vector<double>& exponents);

/// (<|x|^lambda, g>, B_1(lambda, 0) <|y|^{-lambda-1}, g>) with g(x) = exp(-pi x^2),
/// both by adaptive Gauss-Kronrod quadrature.  Requires -1 < lambda < 0.
std::pair<double, double> gaussian_pairing_check(double lambda);

/// <|x|^s, exp(-pi x^2)> over R by quadrature, s > -1.
double gaussian_moment_quadrature(double s);

}  // namespace spheretrace::oracle
