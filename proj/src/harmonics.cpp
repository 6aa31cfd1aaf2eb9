#include "spheretrace/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace spheretrace::harmonics {

namespace {

__extension__ typedef __int128 Wide;

// Exact binomial coefficient; the running product stays an integer at each
// step because it equals C(n, i) after division.
Wide binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<Wide>::max() / (n - k + i)) {
      throw std::overflow_error("binomial: 128-bit overflow");
    }
    r = r * (n - k + i) / i;
  }
  return r;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("dimension exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

Wide checked_mul(Wide a, Wide b) {
  if (a != 0 && (b > std::numeric_limits<Wide>::max() / a)) {
    throw std::overflow_error("128-bit overflow");
  }
  return a * b;
}

Complex ipow(Complex z, int k) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

std::int64_t dim_hk(int N, int k) {
  if (N < 1) throw std::invalid_argument("dim_hk: N must be >= 1");
  if (k < 0) throw std::invalid_argument("dim_hk: k must be >= 0");
  if (N == 1) return k <= 1 ? 1 : 0;
  if (N == 2) return k == 0 ? 1 : 2;
  // (2k+N-2)/(N-2) * C(k+N-3, N-3)
  const Wide c = binomial(k + N - 3, N - 3);
  return narrow(checked_mul(c, 2 * k + N - 2) / (N - 2));
}

std::int64_t dim_hab(int n, int alpha, int beta) {
  if (n < 1) throw std::invalid_argument("dim_hab: n must be >= 1");
  if (alpha < 0 || beta < 0) throw std::invalid_argument("dim_hab: degrees must be >= 0");
  if (n == 1) return (alpha == 0 || beta == 0) ? 1 : 0;
  // (a+b+n-1) (a+1)_{n-2} (b+1)_{n-2} / ((n-1)! (n-2)!)
  //   = (a+b+n-1)/(n-1) * C(a+n-2, n-2) * C(b+n-2, n-2)
  const Wide prod = checked_mul(checked_mul(binomial(alpha + n - 2, n - 2), binomial(beta + n - 2, n - 2)),
                                alpha + beta + n - 1);
  return narrow(prod / (n - 1));
}

std::int64_t alternating_sum_D(int n, int k) {
  if (k < 0) throw std::invalid_argument("alternating_sum_D: k must be >= 0");
  std::int64_t total = 0;
  for (int beta = 0; beta <= k; ++beta) {
    const std::int64_t d = dim_hab(n, k - beta, beta);
    total += (beta % 2 == 0) ? d : -d;
  }
  return total;
}

std::vector<std::int64_t> chebyshev_like_coeffs(int l) {
  if (l < 1) throw std::invalid_argument("chebyshev_like_coeffs: l must be >= 1");
  std::vector<std::int64_t> coeffs;
  for (int j = 0; 2 * j <= l; ++j) {
    const std::int64_t d = dim_hk(l + 2 - 2 * j, j);
    coeffs.push_back(j % 2 == 0 ? d : -d);
  }
  return coeffs;
}

double zonal_value(int N, int k, double t, double r2) {
  if (k == 0) return 1.0;
  if (N == 1) return t;
  double prev = 1.0;
  double cur = t;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + N - 2.0) * t * cur - j * r2 * prev) / (j + N - 2.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

TestPolynomial::TestPolynomial(PolynomialSpec spec, std::function<Complex(std::span<const double>)> eval,
                               int dim, int degree)
    : spec_(std::move(spec)), eval_(std::move(eval)), dim_(dim), degree_(degree) {}

TestPolynomial make_test_polynomial(const PolynomialSpec& spec) {
  if (spec.kind == PolynomialKind::Zonal) {
    if (spec.N < 1 || spec.degree < 0) throw DomainError("zonal polynomial: need N >= 1, degree >= 0");
    if (spec.N == 1 && spec.degree > 1) throw DomainError("zonal polynomial: no harmonics of degree > 1 on R^1");
    if (static_cast<int>(spec.axis.size()) != spec.N) throw DomainError("zonal polynomial: axis length must be N");
    double norm2 = 0.0;
    for (double a : spec.axis) norm2 += a * a;
    if (std::abs(norm2 - 1.0) > 1e-12) throw DomainError("zonal polynomial: axis must be a unit vector");
    const int N = spec.N;
    const int k = spec.degree;
    const std::vector<double> axis = spec.axis;
    auto eval = [N, k, axis](std::span<const double> x) {
      double t = 0.0;
      double r2 = 0.0;
      for (int i = 0; i < N; ++i) {
        t += x[i] * axis[i];
        r2 += x[i] * x[i];
      }
      return Complex(zonal_value(N, k, t, r2), 0.0);
    };
    return TestPolynomial(spec, eval, N, k);
  }

  const int n = spec.n;
  const int a = spec.alpha;
  const int b = spec.beta;
  if (n < 1 || a < 0 || b < 0) throw DomainError("bidegree polynomial: need n >= 1 and nonnegative degrees");
  int i = spec.index[0];
  int j = spec.index[1];
  if (n == 1) {
    if (a > 0 && b > 0) throw DomainError("bidegree polynomial: n = 1 admits only pure bidegrees");
    i = 0;
    j = 0;
  } else {
    if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("bidegree polynomial: index out of range");
    if (a > 0 && b > 0 && i == j) throw DomainError("bidegree polynomial: indices must differ");
  }
  auto eval = [n, a, b, i, j](std::span<const double> x) {
    const Complex zi(x[i], x[n + i]);
    const Complex zj(x[j], x[n + j]);
    return ipow(zi, a) * ipow(std::conj(zj), b);
  };
  PolynomialSpec stored = spec;
  stored.index = {i, j};
  return TestPolynomial(stored, eval, 2 * n, a + b);
}

}  // namespace spheretrace::harmonics
