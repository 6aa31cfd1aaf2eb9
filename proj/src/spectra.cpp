#include "spheretrace/spectra.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace spheretrace::spectra {

namespace {

Complex pi_pow(Complex p) { return std::exp(p * std::log(kPi)); }
Complex two_pow(Complex p) { return std::exp(p * std::log(2.0)); }

void require_positive(int d, const char* what) {
  if (d < 1) throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
}

void require_nonneg(int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + ": degree must be >= 0");
}

std::optional<int> cutoff_of(Complex base) {
  if (!is_gamma_pole(base)) return std::nullopt;
  return static_cast<int>(-std::nearbyint(base.real()));
}

}  // namespace

Complex inverse_i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, -1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, 1.0};
  }
}

MeroValue symplectic_multiplier(int n, int k, Complex mu) {
  require_positive(n, "symplectic_multiplier");
  require_nonneg(k, "symplectic_multiplier");
  if (k % 2 == 1) return MeroValue::zero();
  const double nd = n;
  GammaRatioExpr e;
  e.prefactor = 2.0 * std::pow(kPi, nd - 0.5);
  e.numerator_args = {(1.0 - nd - mu) / 2.0, (static_cast<double>(k) + nd + mu) / 2.0};
  e.denominator_args = {(nd + mu) / 2.0, (static_cast<double>(k) + nd - mu) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue bidegree_eigenvalue(int n, int alpha, int beta, Complex mu) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("bidegree_eigenvalue: degrees must be >= 0");
  const MeroValue a = symplectic_multiplier(n, alpha + beta, mu);
  return beta % 2 == 0 ? a : a * Complex(-1.0, 0.0);
}

MeroValue fourier_homogeneous_constant(int N, Complex lambda, int k) {
  require_positive(N, "fourier_homogeneous_constant");
  require_nonneg(k, "fourier_homogeneous_constant");
  GammaRatioExpr e;
  e.prefactor = pi_pow(-lambda - 0.5 * N) * inverse_i_power(k);
  e.numerator_args = {(static_cast<double>(k) + lambda + static_cast<double>(N)) / 2.0};
  e.denominator_args = {(static_cast<double>(k) - lambda) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue inner_fourier_constant(int N, Complex mu) {
  require_positive(N, "inner_fourier_constant");
  const double Nd = N;
  GammaRatioExpr e;
  e.prefactor = 2.0 * pi_pow(mu + (Nd - 1.0) / 2.0);
  e.numerator_args = {(2.0 - Nd - 2.0 * mu) / 4.0};
  e.denominator_args = {(Nd + 2.0 * mu) / 4.0};
  return eval_gamma_ratio(e);
}

Complex inner_fourier_constant_cosine_form(int N, Complex mu) {
  require_positive(N, "inner_fourier_constant_cosine_form");
  const Complex s = mu + 0.5 * N;
  const Complex num = std::exp(s * std::log(2.0 * kPi));
  return num / (gamma(s) * std::cos(0.5 * kPi * s));
}

MeroValue distance_multiplier_printed(int m, int k, Complex mu) {
  require_positive(m, "distance_multiplier_printed");
  require_nonneg(k, "distance_multiplier_printed");
  const double md = m;
  GammaRatioExpr e;
  e.prefactor = 1.0 / (two_pow(mu + 1.0) * std::sqrt(kPi));
  e.numerator_args = {md + 0.5, -mu / 2.0, static_cast<double>(k) + (md + mu) / 2.0};
  e.denominator_args = {(mu + md) / 2.0, static_cast<double>(k) + (md - mu) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue distance_multiplier_funk_hecke(int m, int k, Complex mu) {
  require_positive(m, "distance_multiplier_funk_hecke");
  require_nonneg(k, "distance_multiplier_funk_hecke");
  const double md = m;
  GammaRatioExpr e;
  e.prefactor = two_pow(-mu) * std::pow(kPi, md / 2.0);
  e.numerator_args = {-mu / 2.0, static_cast<double>(k) + (md + mu) / 2.0};
  e.denominator_args = {(mu + md) / 2.0, static_cast<double>(k) + (md - mu) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue distance_to_symplectic_ratio(int m, Complex mu) {
  require_positive(m, "distance_to_symplectic_ratio");
  const double md = m;
  GammaRatioExpr e;
  e.prefactor = 1.0 / (two_pow(mu + 2.0) * std::pow(kPi, md));
  e.numerator_args = {md + 0.5, -mu / 2.0};
  e.denominator_args = {(1.0 - md - mu) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue funk_hecke_to_symplectic_ratio(int m, Complex mu) {
  require_positive(m, "funk_hecke_to_symplectic_ratio");
  const double md = m;
  GammaRatioExpr e;
  e.prefactor = two_pow(-mu) * std::pow(kPi, 0.5 - md / 2.0) / 2.0;
  e.numerator_args = {-mu / 2.0};
  e.denominator_args = {(1.0 - md - mu) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue inner_multiplier(int N, int l, Complex mu) {
  require_positive(N, "inner_multiplier");
  require_nonneg(l, "inner_multiplier");
  const double Nd = N;
  GammaRatioExpr e;
  e.prefactor = (l % 2 == 0 ? 2.0 : -2.0) * std::pow(kPi, (Nd - 1.0) / 2.0);
  e.numerator_args = {(2.0 - Nd - 2.0 * mu) / 4.0, static_cast<double>(l) + (Nd + 2.0 * mu) / 4.0};
  e.denominator_args = {(Nd + 2.0 * mu) / 4.0, static_cast<double>(l) + (Nd - 2.0 * mu) / 4.0};
  return eval_gamma_ratio(e);
}

MeroValue inner_multiplier_degree(int N, int k, Complex mu) {
  require_nonneg(k, "inner_multiplier_degree");
  if (k % 2 == 1) return MeroValue::zero();
  return inner_multiplier(N, k / 2, mu);
}

double sphere_volume(int N) {
  require_positive(N, "sphere_volume");
  return 2.0 * std::pow(kPi, 0.5 * N) / std::tgamma(0.5 * N);
}

std::optional<int> symplectic_cutoff(int n, Complex mu) { return cutoff_of((static_cast<double>(n) + mu) / 2.0); }

std::optional<int> distance_cutoff(int m, Complex mu) { return cutoff_of((static_cast<double>(m) + mu) / 2.0); }

std::optional<int> inner_cutoff(int N, Complex mu) { return cutoff_of((static_cast<double>(N) + 2.0 * mu) / 4.0); }

}  // namespace spheretrace::spectra
