#include "spheretrace/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace spheretrace {

namespace {

// Godfrey's coefficients for g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

const double kLogSqrt2Pi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

bool all_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex lanczos_log_gamma(Complex z) {
  Complex series = kLanczosCoeffs[0];
  for (std::size_t j = 1; j < kLanczosCoeffs.size(); ++j) {
    series += kLanczosCoeffs[j] / (z + static_cast<double>(j));
  }
  const Complex t = z + kLanczosG + 0.5;
  return (z + 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(series) - std::log(z);
}

double lanczos_log_gamma_real(double x) {
  double series = kLanczosCoeffs[0];
  for (std::size_t j = 1; j < kLanczosCoeffs.size(); ++j) {
    series += kLanczosCoeffs[j] / (x + static_cast<double>(j));
  }
  const double t = x + kLanczosG + 0.5;
  return (x + 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(series / x);
}

double sin_pi_real(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

// log|Gamma(x)| and sign for real non-pole x.
double log_abs_gamma_real(double x, int& sign) {
  if (x >= 0.5) {
    sign = 1;
    return lanczos_log_gamma_real(x);
  }
  const double s = sin_pi_real(x);
  int inner_sign = 1;
  const double inner = log_abs_gamma_real(1.0 - x, inner_sign);
  sign = (s < 0.0 ? -1 : 1) * inner_sign;
  return kLogPi - std::log(std::abs(s)) - inner;
}

// log(sin(pi z)) up to a multiple of 2 pi i, robust for large |Im z|.
Complex log_sin_pi(Complex z) {
  const double n = std::nearbyint(z.real());
  const Complex r(z.real() - n, z.imag());
  const bool odd = std::fmod(n, 2.0) != 0.0;
  Complex result;
  if (std::abs(r.imag()) < 20.0) {
    result = std::log(sin_pi(r));
  } else if (r.imag() > 0.0) {
    // sin(pi r) = (i/2) e^{-i pi r} (1 - e^{2 i pi r})
    const Complex i(0.0, 1.0);
    result = -i * kPi * r + std::log(Complex(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * i * kPi * r));
  } else {
    // sin(pi r) = (-i/2) e^{i pi r} (1 - e^{-2 i pi r})
    const Complex i(0.0, 1.0);
    result = i * kPi * r + std::log(Complex(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * i * kPi * r));
  }
  if (odd) result += Complex(0.0, kPi);
  return result;
}

struct PoleArg {
  long order;  // argument is -order
  std::size_t index;
};

}  // namespace

// ============================================================================
// MeroValue
// ============================================================================

MeroValue MeroValue::finite(Complex v) {
  if (!all_finite(v)) throw DomainError("MeroValue::finite: non-finite payload");
  return MeroValue(Tag::Finite, v);
}

Complex MeroValue::value() const {
  switch (tag_) {
    case Tag::Finite:
      return value_;
    case Tag::Zero:
      return {0.0, 0.0};
    case Tag::Pole:
      break;
  }
  throw DomainError("MeroValue::value: evaluated at a pole");
}

MeroValue MeroValue::operator*(const MeroValue& other) const {
  if ((is_zero() && other.is_pole()) || (is_pole() && other.is_zero())) {
    throw DomainError("MeroValue: indeterminate product 0 * pole");
  }
  if (is_pole() || other.is_pole()) return pole();
  if (is_zero() || other.is_zero()) return zero();
  return finite(value_ * other.value_);
}

MeroValue MeroValue::operator*(Complex scale) const {
  if (!all_finite(scale)) throw DomainError("MeroValue: non-finite scale");
  if (scale == Complex(0.0, 0.0)) {
    if (is_pole()) throw DomainError("MeroValue: indeterminate product 0 * pole");
    return zero();
  }
  if (!is_finite()) return *this;
  return finite(value_ * scale);
}

MeroValue MeroValue::operator/(const MeroValue& other) const {
  if ((is_zero() && other.is_zero()) || (is_pole() && other.is_pole())) {
    throw DomainError("MeroValue: indeterminate quotient");
  }
  if (is_pole() || other.is_zero()) return pole();
  if (is_zero() || other.is_pole()) return zero();
  return finite(value_ / other.value_);
}

std::string MeroValue::to_string() const {
  if (!is_finite()) return tag_name(tag_);
  std::ostringstream os;
  os.precision(17);
  os << value_.real();
  if (value_.imag() != 0.0) os << (value_.imag() < 0 ? "-" : "+") << std::abs(value_.imag()) << "i";
  return os.str();
}

const char* tag_name(MeroValue::Tag tag) {
  switch (tag) {
    case MeroValue::Tag::Finite:
      return "finite";
    case MeroValue::Tag::Zero:
      return "zero";
    case MeroValue::Tag::Pole:
      return "pole";
  }
  return "?";
}

// ============================================================================
// Gamma function
// ============================================================================

bool is_gamma_pole(Complex z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_gamma_pole: tol must be positive");
  if (std::abs(z.imag()) > tol) return false;
  const double n = std::nearbyint(z.real());
  return n <= 0.0 && std::abs(z.real() - n) <= tol;
}

Complex sin_pi(Complex z) {
  const double n = std::nearbyint(z.real());
  const double r = z.real() - n;
  const double y = kPi * z.imag();
  Complex s(std::sin(kPi * r) * std::cosh(y), std::cos(kPi * r) * std::sinh(y));
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

Complex log_gamma(Complex z) {
  if (!all_finite(z)) throw DomainError("log_gamma: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real())) {
    throw DomainError("log_gamma: pole at nonpositive integer");
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex pochhammer(Complex a, unsigned l) {
  constexpr unsigned kExactProductLimit = 64;
  const bool nonpositive_integer = a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::nearbyint(a.real());
  if (l <= kExactProductLimit || nonpositive_integer) {
    if (nonpositive_integer && static_cast<double>(l) > -a.real()) return {0.0, 0.0};
    Complex p(1.0, 0.0);
    for (unsigned j = 0; j < l; ++j) p *= a + static_cast<double>(j);
    return p;
  }
  if (a.imag() == 0.0) {
    int s1 = 1;
    int s2 = 1;
    const double v = log_abs_gamma_real(a.real() + l, s1) - log_abs_gamma_real(a.real(), s2);
    return {static_cast<double>(s1 * s2) * std::exp(v), 0.0};
  }
  return std::exp(log_gamma(a + static_cast<double>(l)) - log_gamma(a));
}

MeroValue eval_gamma_ratio(const GammaRatioExpr& expr, double pole_tol) {
  if (!all_finite(expr.prefactor)) throw DomainError("eval_gamma_ratio: non-finite prefactor");

  std::vector<PoleArg> num_poles;
  std::vector<PoleArg> den_poles;
  std::vector<Complex> num_regular;
  std::vector<Complex> den_regular;

  auto classify = [&](const std::vector<Complex>& args, std::vector<PoleArg>& poles, std::vector<Complex>& regular) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!all_finite(args[i])) throw DomainError("eval_gamma_ratio: non-finite argument");
      if (is_gamma_pole(args[i], pole_tol)) {
        poles.push_back({static_cast<long>(-std::nearbyint(args[i].real())), i});
      } else {
        regular.push_back(args[i]);
      }
    }
  };
  classify(expr.numerator_args, num_poles, num_regular);
  classify(expr.denominator_args, den_poles, den_regular);

  // Sort by real part (-order); stable on original index for determinism.
  auto by_real_part = [](const PoleArg& a, const PoleArg& b) {
    return a.order != b.order ? a.order > b.order : a.index < b.index;
  };
  std::sort(num_poles.begin(), num_poles.end(), by_real_part);
  std::sort(den_poles.begin(), den_poles.end(), by_real_part);

  double pair_factor = 1.0;
  std::vector<bool> used(den_poles.size(), false);
  std::size_t unmatched_num = 0;
  for (const PoleArg& np : num_poles) {
    std::size_t best = den_poles.size();
    long best_gap = 0;
    for (std::size_t j = 0; j < den_poles.size(); ++j) {
      if (used[j]) continue;
      const long gap = std::labs(np.order - den_poles[j].order);
      if (best == den_poles.size() || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    if (best == den_poles.size()) {
      ++unmatched_num;
      continue;
    }
    used[best] = true;
    // lim Gamma(x - a) / Gamma(x - b) = (-1)^(a-b) b! / a!
    const long a = np.order;
    const long b = den_poles[best].order;
    double f = 1.0;
    for (long j = std::min(a, b) + 1; j <= std::max(a, b); ++j) f *= static_cast<double>(j);
    f = a > b ? 1.0 / f : f;
    if ((a - b) % 2 != 0) f = -f;
    pair_factor *= f;
  }
  const auto unmatched_den = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));

  if (unmatched_num > 0) return MeroValue::pole();
  if (unmatched_den > 0) return MeroValue::zero();
  if (expr.prefactor == Complex(0.0, 0.0)) return MeroValue::zero();

  const bool real_path = expr.prefactor.imag() == 0.0 &&
                         std::all_of(num_regular.begin(), num_regular.end(), [](Complex z) { return z.imag() == 0.0; }) &&
                         std::all_of(den_regular.begin(), den_regular.end(), [](Complex z) { return z.imag() == 0.0; });

  if (real_path) {
    double log_mag = std::log(std::abs(expr.prefactor.real()) * std::abs(pair_factor));
    int sign = (expr.prefactor.real() < 0.0 ? -1 : 1) * (pair_factor < 0.0 ? -1 : 1);
    for (Complex z : num_regular) {
      int s = 1;
      log_mag += log_abs_gamma_real(z.real(), s);
      sign *= s;
    }
    for (Complex z : den_regular) {
      int s = 1;
      log_mag -= log_abs_gamma_real(z.real(), s);
      sign *= s;
    }
    const double v = sign * std::exp(log_mag);
    if (!std::isfinite(v)) throw DomainError("eval_gamma_ratio: result overflows double");
    return MeroValue::finite({v, 0.0});
  }

  Complex log_sum(0.0, 0.0);
  for (Complex z : num_regular) log_sum += log_gamma(z);
  for (Complex z : den_regular) log_sum -= log_gamma(z);
  const Complex v = expr.prefactor * pair_factor * std::exp(log_sum);
  if (!all_finite(v)) throw DomainError("eval_gamma_ratio: result overflows double");
  return MeroValue::finite(v);
}

}  // namespace spheretrace
