#include "spheretrace/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "spheretrace/spectra.hpp"
#include "spheretrace/triple.hpp"

namespace spheretrace::oracle {

namespace {

// Welford accumulator; merged in shard order.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / n;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / n;
    count += o.count;
  }
};

double power(double base, double e) {
  if (e == 0.0) return 1.0;
  if (e == 2.0) return base * base;
  if (e == 4.0) return (base * base) * (base * base);
  return std::pow(base, e);
}

void fill_sphere(std::vector<double>& v, rng::CounterRng& gen) {
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& c : v) {
      c = gen.normal();
      norm2 += c * c;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : v) c *= inv;
}

double single_exponent_bound(const OperatorKind& kind) {
  return kind.tag == OperatorKind::Tag::Distance ? -static_cast<double>(kind.dim) : -1.0;
}

// Runs `body(gen, moments, count)` for each shard's share of the samples, one
// stream per shard, and merges the moments in shard order.
template <typename Body>
Moments run_shards(std::uint64_t samples, std::uint64_t seed, int shards, Body body) {
  if (shards < 1) throw std::invalid_argument("shards must be >= 1");
  std::vector<std::future<Moments>> futures;
  const std::uint64_t per = samples / static_cast<std::uint64_t>(shards);
  const std::uint64_t extra = samples % static_cast<std::uint64_t>(shards);
  for (int s = 0; s < shards; ++s) {
    const std::uint64_t count = per + (static_cast<std::uint64_t>(s) < extra ? 1 : 0);
    futures.push_back(std::async(std::launch::async, [=] {
      rng::CounterRng gen(seed, static_cast<std::uint64_t>(s));
      Moments m;
      body(gen, m, count);
      return m;
    }));
  }
  Moments total;
  for (auto& f : futures) total.merge(f.get());
  return total;
}

MCEstimate finish(const Moments& m, double scale, std::uint64_t seed, int shards) {
  MCEstimate est;
  est.samples = m.count;
  est.seed = seed;
  est.shards = shards;
  est.mean = scale * m.mean;
  const double var = m.count > 1 ? m.m2 / static_cast<double>(m.count - 1) : 0.0;
  est.std_error = std::abs(scale) * std::sqrt(var / static_cast<double>(m.count));
  return est;
}

void check_kind_dims(const OperatorKind& kind) {
  if (kind.dim < 1) throw DomainError("kernel dimension must be >= 1");
}

}  // namespace

bool KernelSpec::is_polynomial() const {
  for (double e : exponents) {
    if (e < 0.0 || std::fmod(e, 2.0) != 0.0) return false;
  }
  return true;
}

SpherePoint sample_sphere(int N, rng::CounterRng& gen) {
  if (N < 1) throw std::invalid_argument("sample_sphere: N must be >= 1");
  SpherePoint p;
  p.coords.resize(static_cast<std::size_t>(N));
  fill_sphere(p.coords, gen);
  return p;
}

double symplectic_form(const SpherePoint& X, const SpherePoint& Y) {
  if (X.dim() != Y.dim() || X.dim() % 2 != 0) throw std::invalid_argument("symplectic_form: need matching even dimensions");
  const int n = X.dim() / 2;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += -X.coords[i] * Y.coords[n + i] + Y.coords[i] * X.coords[n + i];
  return s;
}

double symplectic_form_via_J(const SpherePoint& X, const SpherePoint& Y) {
  if (X.dim() != Y.dim() || X.dim() % 2 != 0) throw std::invalid_argument("symplectic_form_via_J: need matching even dimensions");
  const int n = X.dim() / 2;
  std::vector<double> JY(Y.coords.size());
  for (int i = 0; i < n; ++i) {
    JY[i] = -Y.coords[n + i];
    JY[n + i] = Y.coords[i];
  }
  double s = 0.0;
  for (int i = 0; i < 2 * n; ++i) s += X.coords[i] * JY[i];
  return s;
}

double pair_kernel(const OperatorKind& kind, std::span<const double> X, std::span<const double> Y) {
  const std::size_t d = X.size();
  double s = 0.0;
  switch (kind.tag) {
    case OperatorKind::Tag::Symplectic: {
      const std::size_t n = d / 2;
      for (std::size_t i = 0; i < n; ++i) s += -X[i] * Y[n + i] + Y[i] * X[n + i];
      return std::abs(s);
    }
    case OperatorKind::Tag::Distance:
      for (std::size_t i = 0; i < d; ++i) s += (X[i] - Y[i]) * (X[i] - Y[i]);
      return std::sqrt(s);
    case OperatorKind::Tag::InnerProduct:
      for (std::size_t i = 0; i < d; ++i) s += X[i] * Y[i];
      return std::abs(s);
  }
  return 0.0;
}

MCEstimate mc_triple(const KernelSpec& kernel, std::uint64_t samples, std::uint64_t seed, int shards) {
  check_kind_dims(kernel.kind);
  if (kernel.exponents.size() != 3) throw std::invalid_argument("mc_triple: three exponents required");
  if (samples == 0) throw std::invalid_argument("mc_triple: samples must be positive");
  const Triple e{kernel.exponents[0], kernel.exponents[1], kernel.exponents[2]};
  const ParamSet p = params_from_exponents(kernel.kind, e);
  const triple::RegionReport region = triple::region_check(p);
  if (!region.convergent) throw DomainError("mc_triple: exponents outside the convergence region");
  std::string note;
  for (double x : kernel.exponents) {
    if (x <= -0.5) throw DomainError("mc_triple: Monte Carlo requires exponents > -1/2 (finite variance)");
    if (x < 0.0) note = "singular kernel: variance may be large";
  }

  const int dim = kernel.kind.ambient_dim();
  const double vol = spectra::sphere_volume(dim);
  const OperatorKind kind = kernel.kind;
  const double e1 = e[0].real(), e2 = e[1].real(), e3 = e[2].real();
  Moments m = run_shards(samples, seed, shards, [&](rng::CounterRng& gen, Moments& acc, std::uint64_t count) {
    std::vector<double> X(dim), Y(dim), Z(dim);
    for (std::uint64_t i = 0; i < count; ++i) {
      fill_sphere(X, gen);
      fill_sphere(Y, gen);
      fill_sphere(Z, gen);
      acc.add(power(pair_kernel(kind, Y, Z), e1) * power(pair_kernel(kind, Z, X), e2) *
              power(pair_kernel(kind, X, Y), e3));
    }
  });
  MCEstimate est = finish(m, vol * vol * vol, seed, shards);
  est.note = note;
  return est;
}

MCEstimate mc_apply_operator(const KernelSpec& kernel, const harmonics::TestPolynomial& p, const SpherePoint& eta,
                             std::uint64_t samples, std::uint64_t seed, int shards) {
  check_kind_dims(kernel.kind);
  if (kernel.exponents.size() != 1) throw std::invalid_argument("mc_apply_operator: one exponent required");
  if (samples == 0) throw std::invalid_argument("mc_apply_operator: samples must be positive");
  const int dim = kernel.kind.ambient_dim();
  if (p.dimension() != dim || eta.dim() != dim) throw std::invalid_argument("mc_apply_operator: dimension mismatch");
  const double e = kernel.exponents[0];
  if (!(e > single_exponent_bound(kernel.kind))) throw DomainError("mc_apply_operator: kernel exponent not integrable");
  if (e <= -0.5) throw DomainError("mc_apply_operator: Monte Carlo requires exponent > -1/2 (finite variance)");

  const double vol = spectra::sphere_volume(dim);
  const OperatorKind kind = kernel.kind;
  const std::vector<double> target = eta.coords;
  Moments m = run_shards(samples, seed, shards, [&](rng::CounterRng& gen, Moments& acc, std::uint64_t count) {
    std::vector<double> w(dim);
    for (std::uint64_t i = 0; i < count; ++i) {
      fill_sphere(w, gen);
      acc.add(p.value(w) * power(pair_kernel(kind, w, target), e));
    }
  });
  MCEstimate est = finish(m, vol, seed, shards);
  if (e < 0.0) est.note = "singular kernel: variance may be large";
  return est;
}

MCEstimate mc_multiplier(const KernelSpec& kernel, const harmonics::TestPolynomial& p, const SpherePoint& eta,
                         std::uint64_t samples, std::uint64_t seed, int shards) {
  const double at = p.value(eta.coords);
  if (!(std::abs(at) > 0.1)) throw DomainError("mc_multiplier: |p(eta)| too small, choose another eta");
  MCEstimate est = mc_apply_operator(kernel, p, eta, samples, seed, shards);
  est.mean /= at;
  est.std_error /= std::abs(at);
  return est;
}

double torus_quadrature_triple(const OperatorKind& kind, int n_grid, const std::vector<double>& exponents) {
  if (kind.ambient_dim() != 2) throw DomainError("torus quadrature: only circle kernels (ambient dimension 2)");
  if (n_grid < 64 || (n_grid & (n_grid - 1)) != 0) throw DomainError("torus quadrature: n_grid must be a power of two >= 64");
  if (exponents.size() != 3) throw std::invalid_argument("torus quadrature: three exponents required");
  for (double e : exponents) {
    if (e < 0.0 || std::fmod(e, 2.0) != 0.0) throw DomainError("torus quadrature: exponents must be even and nonnegative");
  }
  // Rotation invariance fixes X at angle 0; the remaining double integral
  // over (b, c) is a trigonometric polynomial.
  const double h = 2.0 * kPi / n_grid;
  const double X[2] = {1.0, 0.0};
  double total = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double Y[2] = {std::cos(i * h), std::sin(i * h)};
    double row = 0.0;
    for (int j = 0; j < n_grid; ++j) {
      const double Z[2] = {std::cos(j * h), std::sin(j * h)};
      row += power(pair_kernel(kind, Y, Z), exponents[0]) * power(pair_kernel(kind, Z, X), exponents[1]) *
             power(pair_kernel(kind, X, Y), exponents[2]);
    }
    total += row;
  }
  return 2.0 * kPi * h * h * total;
}

double gaussian_moment_quadrature(double s) {
  if (!(s > -1.0)) throw DomainError("gaussian moment: exponent must exceed -1");
  using boost::math::quadrature::gauss_kronrod;
  // int_0^inf x^s e^{-pi x^2} dx with the x^s singularity split off:
  //   int_0^1 x^s (e^{-pi x^2} - 1) dx + 1/(s+1) + int_1^inf x^s e^{-pi x^2} dx.
  auto near = [s](double x) { return x == 0.0 ? 0.0 : std::pow(x, s) * std::expm1(-kPi * x * x); };
  auto far = [s](double x) { return std::pow(x, s) * std::exp(-kPi * x * x); };
  double err = 0.0;
  const double inner = gauss_kronrod<double, 61>::integrate(near, 0.0, 1.0, 20, 1e-14, &err);
  const double outer =
      gauss_kronrod<double, 61>::integrate(far, 1.0, std::numeric_limits<double>::infinity(), 20, 1e-14, &err);
  return 2.0 * (inner + 1.0 / (s + 1.0) + outer);
}

std::pair<double, double> gaussian_pairing_check(double lambda) {
  if (!(lambda > -1.0 && lambda < 0.0)) throw DomainError("gaussian_pairing_check: lambda must lie in (-1, 0)");
  const double lhs = gaussian_moment_quadrature(lambda);
  const MeroValue b = spectra::fourier_homogeneous_constant(1, lambda, 0);
  const double rhs = b.value().real() * gaussian_moment_quadrature(-lambda - 1.0);
  return {lhs, rhs};
}

}  // namespace spheretrace::oracle
