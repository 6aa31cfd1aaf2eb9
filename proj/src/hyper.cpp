#include "spheretrace/hyper.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spheretrace::hyper {

namespace {

bool is_nonpositive_integer(Complex z) { return is_gamma_pole(z, kPoleTol); }

std::size_t pole_index(Complex z) { return static_cast<std::size_t>(-std::nearbyint(z.real())); }

}  // namespace

Complex convergence_excess(const HyperParams& params) {
  Complex e(0.0, 0.0);
  for (Complex b : params.lower) e += b;
  for (Complex a : params.upper) e -= a;
  return e;
}

std::optional<std::size_t> truncation_degree(const HyperParams& params) {
  std::optional<std::size_t> degree;
  for (Complex a : params.upper) {
    if (is_nonpositive_integer(a)) {
      const std::size_t k = pole_index(a);
      if (!degree || k < *degree) degree = k;
    }
  }
  return degree;
}

SeriesResult pfq(const HyperParams& params, double rel_tol, std::size_t max_terms) {
  const Complex z = params.argument;
  const std::optional<std::size_t> degree = truncation_degree(params);

  for (Complex b : params.lower) {
    if (is_nonpositive_integer(b) && (!degree || pole_index(b) <= *degree)) {
      throw DomainError("pfq: lower parameter reaches a pole before the series terminates");
    }
  }

  TailModel tail;
  const double modulus = std::abs(z);
  const bool unit = std::abs(modulus - 1.0) <= 1e-14;
  if (!degree) {
    if (modulus > 1.0 && !unit) throw DomainError("pfq: |argument| > 1 is outside the series region");
    if (unit) {
      if (params.upper.size() != params.lower.size() + 1) {
        throw DomainError("pfq: unit argument requires p = q + 1");
      }
      const Complex excess = convergence_excess(params);
      if (std::abs(z - 1.0) <= 1e-14) {
        if (excess.real() <= kUnitArgumentGuard) {
          throw DomainError("pfq: series at argument 1 needs Re(sum lower - sum upper) > 0.05");
        }
        tail.kind = TailKind::Algebraic;
        tail.exponent = excess;
      } else if (std::abs(z + 1.0) <= 1e-14) {
        if (excess.real() + 1.0 <= kUnitArgumentGuard) {
          throw DomainError("pfq: series at argument -1 needs Re(sum lower - sum upper) > -0.95");
        }
        tail.kind = TailKind::Alternating;
        tail.exponent = excess + 1.0;
      } else {
        if (excess.real() + 1.0 <= kUnitArgumentGuard) {
          throw DomainError("pfq: series on the unit circle needs Re(sum lower - sum upper) > -0.95");
        }
        tail.kind = TailKind::Oscillating;
        tail.ratio = z;
      }
    } else {
      tail.kind = TailKind::Geometric;
      tail.modulus = modulus;
    }
  }

  Complex current(1.0, 0.0);
  auto term = [&](std::size_t l) {
    if (l == 0) return current;
    const double k = static_cast<double>(l - 1);
    Complex ratio = z / static_cast<double>(l);
    for (Complex a : params.upper) ratio *= a + k;
    for (Complex b : params.lower) ratio /= b + k;
    current *= ratio;
    return current;
  };

  SeriesOptions options;
  options.rel_tol = rel_tol;
  options.max_terms = max_terms;
  return sum_series(term, tail, degree, options);
}

bool is_well_poised(const HyperParams& params) {
  if (params.upper.size() != params.lower.size() + 1) {
    throw std::invalid_argument("is_well_poised: requires p = q + 1");
  }
  const Complex target = 1.0 + params.upper[0];
  for (std::size_t i = 0; i < params.lower.size(); ++i) {
    if (std::abs(params.upper[i + 1] + params.lower[i] - target) > 1e-10) return false;
  }
  return true;
}

MeroValue dougall_rhs(Complex m, Complex x, Complex y, Complex z) {
  GammaRatioExpr expr;
  expr.numerator_args = {x + m, y + m, z + m, x + y + z + m};
  expr.denominator_args = {m, x + y + m, y + z + m, x + z + m};
  return eval_gamma_ratio(expr);
}

HyperParams dougall_series_params(Complex m, Complex x, Complex y, Complex z) {
  HyperParams p;
  p.upper = {m - 1.0, (m + 1.0) / 2.0, -x, -y, -z};
  p.lower = {(m - 1.0) / 2.0, x + m, y + m, z + m};
  p.argument = 1.0;
  return p;
}

HyperParams whipple_series_params(Complex a, Complex b, Complex c, Complex d, Complex e) {
  HyperParams p;
  p.upper = {a, 1.0 + a / 2.0, b, c, d, e};
  p.lower = {a / 2.0, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - e};
  p.argument = -1.0;
  return p;
}

SeriesResult whipple_rhs(Complex a, Complex b, Complex c, Complex d, Complex e, double rel_tol,
                         std::size_t max_terms) {
  GammaRatioExpr prefactor;
  prefactor.numerator_args = {1.0 + a - d, 1.0 + a - e};
  prefactor.denominator_args = {1.0 + a, 1.0 + a - d - e};
  const MeroValue pre = eval_gamma_ratio(prefactor);
  if (pre.is_pole()) throw DomainError("whipple_rhs: gamma prefactor has a pole");

  HyperParams f32;
  f32.upper = {1.0 + a - b - c, d, e};
  f32.lower = {1.0 + a - b, 1.0 + a - c};
  f32.argument = 1.0;
  SeriesResult s = pfq(f32, rel_tol, max_terms);
  s.value *= pre.value();
  s.last_term_mag *= std::abs(pre.value());
  return s;
}

}  // namespace spheretrace::hyper
