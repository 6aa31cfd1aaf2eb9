#include "spheretrace/triple.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "spheretrace/harmonics.hpp"
#include "spheretrace/spectra.hpp"

namespace spheretrace::triple {

namespace {

Complex two_pow(Complex p) { return std::exp(p * std::log(2.0)); }

Complex sum3(const Triple& t) { return t[0] + t[1] + t[2]; }

// Multiplier sequence M_l = M_0 * prod_{i<l} sign (i + a) / (i + b), walked
// incrementally.  Falls back to a direct evaluation when the recurrence
// would divide by zero or the base value is not finite.
class MultiplierWalk {
 public:
  MultiplierWalk(std::function<MeroValue(std::size_t)> direct, Complex a, Complex b, double sign)
      : direct_(std::move(direct)), a_(a), b_(b), sign_(sign) {
    const MeroValue base = direct_(0);
    recurrence_ok_ = base.is_finite() || base.is_zero();
    if (base.is_pole()) throw DomainError("trace series: multiplier has a pole at degree 0");
    if (is_gamma_pole(b_)) recurrence_ok_ = false;
    current_ = base.is_finite() ? base.value() : Complex(0.0, 0.0);
    if (base.is_zero()) recurrence_ok_ = false;
  }

  Complex at(std::size_t l) {
    if (!recurrence_ok_) {
      const MeroValue v = direct_(l);
      if (v.is_pole()) throw DomainError("trace series: multiplier has a pole");
      return v.value();
    }
    while (index_ < l) {
      const double i = static_cast<double>(index_);
      current_ *= sign_ * (i + a_) / (i + b_);
      ++index_;
    }
    return current_;
  }

 private:
  std::function<MeroValue(std::size_t)> direct_;
  Complex a_;
  Complex b_;
  double sign_;
  bool recurrence_ok_ = true;
  Complex current_;
  std::size_t index_ = 0;
};

double multiplicity(int N, std::size_t k) {
  try {
    return static_cast<double>(harmonics::dim_hk(N, static_cast<int>(k)));
  } catch (const std::overflow_error&) {
    // (2k+N-2) (k+N-3)! / (k! (N-2)!)
    const double kd = static_cast<double>(k);
    return std::exp(std::log(2.0 * kd + N - 2.0) + std::lgamma(kd + N - 2.0) - std::lgamma(kd + 1.0) -
                    std::lgamma(N - 1.0));
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

RegionInequality greater(std::string description, double lhs, double bound) {
  return {std::move(description), lhs, bound, lhs > bound};
}

}  // namespace

MeroValue closed_symplectic(const ParamSet& p) {
  if (p.kind.tag != OperatorKind::Tag::Symplectic) throw std::invalid_argument("closed_symplectic: symplectic parameters required");
  const double n = p.kind.dim;
  const auto& [a, b, g, d] = p.abgd;
  GammaRatioExpr e;
  e.prefactor = std::pow(2.0 * std::pow(kPi, n - 0.5), 3);
  e.numerator_args = {(2.0 - n + a) / 4.0, (2.0 - n + b) / 4.0, (2.0 - n + g) / 4.0, (d + n) / 4.0};
  e.denominator_args = {n, (n - p.lambda[0]) / 2.0, (n - p.lambda[1]) / 2.0, (n - p.lambda[2]) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue trace_closed_T(int n_in, const Triple& mu) {
  if (n_in < 1) throw std::invalid_argument("trace_closed_T: n must be >= 1");
  const double n = n_in;
  GammaRatioExpr e;
  e.prefactor = std::pow(2.0 * std::pow(kPi, n - 0.5), 3);
  e.numerator_args = {(1.0 - n - mu[0]) / 2.0, (1.0 - n - mu[1]) / 2.0, (1.0 - n - mu[2]) / 2.0,
                      (-sum3(mu) - n) / 2.0};
  e.denominator_args = {n, -(mu[0] + mu[1]) / 2.0, -(mu[1] + mu[2]) / 2.0, -(mu[0] + mu[2]) / 2.0};
  return eval_gamma_ratio(e);
}

Complex trace_tail_exponent(const OperatorKind& kind, const Triple& mu) {
  const double d = kind.dim;
  switch (kind.tag) {
    case OperatorKind::Tag::Symplectic:
    case OperatorKind::Tag::Distance:
      return -(d + sum3(mu));
    case OperatorKind::Tag::InnerProduct:
      return -(d - 2.0 + sum3(mu));
  }
  return {0.0, 0.0};
}

SeriesResult trace_series(const OperatorKind& kind, const Triple& mu, double rel_tol, std::size_t max_terms,
                          DistanceVariant variant) {
  if (kind.dim < 1) throw std::invalid_argument("trace_series: dimension must be >= 1");
  const int d = kind.dim;
  const double dd = d;

  std::vector<MultiplierWalk> walks;
  std::optional<std::size_t> last_index;
  auto note_cutoff = [&](std::optional<int> c) {
    if (c && (!last_index || static_cast<std::size_t>(*c) < *last_index)) last_index = static_cast<std::size_t>(*c);
  };
  int mult_dim = 0;
  int degree_step = 1;
  TailKind tail_kind = TailKind::Algebraic;

  for (const Complex m : mu) {
    switch (kind.tag) {
      case OperatorKind::Tag::Symplectic:
        walks.emplace_back([d, m](std::size_t l) { return spectra::symplectic_multiplier(d, 2 * static_cast<int>(l), m); },
                           (dd + m) / 2.0, (dd - m) / 2.0, 1.0);
        note_cutoff(spectra::symplectic_cutoff(d, m));
        break;
      case OperatorKind::Tag::Distance:
        if (variant == DistanceVariant::FunkHecke) {
          walks.emplace_back(
              [d, m](std::size_t k) { return spectra::distance_multiplier_funk_hecke(d, static_cast<int>(k), m); },
              (dd + m) / 2.0, (dd - m) / 2.0, 1.0);
        } else {
          walks.emplace_back(
              [d, m](std::size_t k) { return spectra::distance_multiplier_printed(d, static_cast<int>(k), m); },
              (dd + m) / 2.0, (dd - m) / 2.0, 1.0);
        }
        note_cutoff(spectra::distance_cutoff(d, m));
        break;
      case OperatorKind::Tag::InnerProduct:
        walks.emplace_back([d, m](std::size_t l) { return spectra::inner_multiplier(d, static_cast<int>(l), m); },
                           (dd + 2.0 * m) / 4.0, (dd - 2.0 * m) / 4.0, -1.0);
        note_cutoff(spectra::inner_cutoff(d, m));
        break;
    }
  }
  switch (kind.tag) {
    case OperatorKind::Tag::Symplectic:
      mult_dim = d + 1;
      break;
    case OperatorKind::Tag::Distance:
      mult_dim = d + 1;
      break;
    case OperatorKind::Tag::InnerProduct:
      mult_dim = d;
      degree_step = 2;
      tail_kind = TailKind::Alternating;
      break;
  }

  TailModel tail;
  tail.kind = tail_kind;
  tail.exponent = trace_tail_exponent(kind, mu);
  if (!last_index && !(tail.exponent.real() > kTraceTailGuard)) {
    throw DomainError("trace series: spectral sum diverges (tail exponent " + fmt(tail.exponent.real()) +
                      " must exceed " + fmt(kTraceTailGuard) + "); make Re(mu) more negative");
  }

  auto term = [&](std::size_t l) {
    Complex t(multiplicity(mult_dim, degree_step * l), 0.0);
    for (auto& w : walks) t *= w.at(l);
    return t;
  };
  SeriesOptions options;
  options.rel_tol = rel_tol;
  options.max_terms = max_terms;
  return sum_series(term, tail, last_index, options);
}

MeroValue trace_dougall_assembly(int n, const Triple& mu) {
  MeroValue product = MeroValue::finite(1.0);
  for (const Complex m : mu) product = product * spectra::symplectic_multiplier(n, 0, m);
  const double nd = n;
  const MeroValue rhs = hyper::dougall_rhs(nd, -(nd + mu[0]) / 2.0, -(nd + mu[1]) / 2.0, -(nd + mu[2]) / 2.0);
  return product * rhs;
}

MeroValue closed_distance_printed(const ParamSet& p) {
  if (p.kind.tag != OperatorKind::Tag::Distance) throw std::invalid_argument("closed_distance_printed: distance parameters required");
  const double m = p.kind.dim;
  const auto& [a, b, g, d] = p.abgd;
  GammaRatioExpr e;
  e.prefactor = std::pow(std::pow(2.0, 1.0 - m / 2.0) * std::sqrt(kPi), -3) * two_pow(-sum3(p.lambda) / 2.0);
  e.numerator_args = {m + 0.5, m + 0.5, m + 0.5, (a + m) / 4.0, (b + m) / 4.0, (g + m) / 4.0, (d + m) / 4.0};
  e.denominator_args = {m, (m - p.lambda[0]) / 2.0, (m - p.lambda[1]) / 2.0, (m - p.lambda[2]) / 2.0};
  return eval_gamma_ratio(e);
}

MeroValue closed_distance_consistent(const ParamSet& p) {
  if (p.kind.tag != OperatorKind::Tag::Distance) throw std::invalid_argument("closed_distance_consistent: distance parameters required");
  MeroValue v = trace_closed_T(p.kind.dim, p.mu);
  for (const Complex m : p.mu) v = v * spectra::funk_hecke_to_symplectic_ratio(p.kind.dim, m);
  return v;
}

MeroValue comparison_constant(int m_in, const Triple& mu) {
  if (m_in < 1) throw std::invalid_argument("comparison_constant: m must be >= 1");
  const double m = m_in;
  GammaRatioExpr e;
  e.prefactor = std::pow(4.0 * std::pow(kPi, m), -3) * two_pow(-sum3(mu));
  e.numerator_args = {m + 0.5, m + 0.5, m + 0.5, -mu[0] / 2.0, -mu[1] / 2.0, -mu[2] / 2.0};
  e.denominator_args = {(1.0 - m - mu[0]) / 2.0, (1.0 - m - mu[1]) / 2.0, (1.0 - m - mu[2]) / 2.0};
  return eval_gamma_ratio(e);
}

InnerClosedForm closed_inner_printed(int N_in, const Triple& nu, double rel_tol, std::size_t max_terms) {
  if (N_in < 1) throw std::invalid_argument("closed_inner_printed: N must be >= 1");
  const double N = N_in;
  GammaRatioExpr e;
  e.prefactor = std::pow(2.0 * std::pow(kPi, (N - 3.0) / 2.0), 3);
  e.numerator_args = {0.5 - nu[0], 0.5 - nu[1], 0.5 - nu[2]};
  e.denominator_args = {N / 2.0, -nu[1] - nu[2] + N / 2.0, -nu[0] + N / 2.0};

  InnerClosedForm out;
  out.prefactor = eval_gamma_ratio(e);
  if (!out.prefactor.is_finite()) {
    out.value = out.prefactor;
    return out;
  }
  hyper::HyperParams f32;
  f32.upper = {0.5 - nu[0], nu[1], nu[2]};
  f32.lower = {0.5, -nu[0] + N / 2.0};
  f32.argument = 1.0;
  out.hypergeometric = hyper::pfq(f32, rel_tol, max_terms);
  out.value = out.prefactor * out.hypergeometric.value;
  return out;
}

InnerClosedForm closed_inner_consistent(int N_in, const Triple& mu, double rel_tol, std::size_t max_terms) {
  if (N_in < 1) throw std::invalid_argument("closed_inner_consistent: N must be >= 1");
  const double N = N_in;
  InnerClosedForm out;
  out.prefactor = MeroValue::finite(1.0);
  for (const Complex m : mu) out.prefactor = out.prefactor * spectra::inner_multiplier(N_in, 0, m);
  if (!out.prefactor.is_finite()) {
    out.value = out.prefactor;
    return out;
  }
  out.hypergeometric = hyper::whipple_rhs(N / 2.0 - 1.0, (N - 1.0) / 2.0, (N + 2.0 * mu[0]) / 4.0,
                                          (N + 2.0 * mu[1]) / 4.0, (N + 2.0 * mu[2]) / 4.0, rel_tol, max_terms);
  out.value = out.prefactor * out.hypergeometric.value;
  return out;
}

RegionReport region_check(const ParamSet& p) {
  RegionReport r;
  const double d = p.kind.dim;
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) sum += p.exponents[j].real();
  const std::string idx[3] = {"1", "2", "3"};

  switch (p.kind.tag) {
    case OperatorKind::Tag::Symplectic:
      for (int j = 0; j < 3; ++j) {
        r.inequalities.push_back(greater("Re e" + idx[j] + " > -1", p.exponents[j].real(), -1.0));
      }
      if (p.kind.dim == 1) r.inequalities.push_back(greater("Re(e1+e2+e3) > -2", sum, -2.0));
      {
        const char* names[3] = {"alpha", "beta", "gamma"};
        for (int j = 0; j < 3; ++j) {
          r.abgd_inequalities.push_back(
              greater(std::string("Re ") + names[j] + " > n-2", p.abgd[j].real(), d - 2.0));
        }
        if (p.kind.dim == 1) r.abgd_inequalities.push_back(greater("Re delta > -1", p.abgd[3].real(), -1.0));
        r.abgd_form = std::all_of(r.abgd_inequalities.begin(), r.abgd_inequalities.end(),
                                  [](const RegionInequality& q) { return q.holds; });
      }
      break;
    case OperatorKind::Tag::InnerProduct:
      for (int j = 0; j < 3; ++j) {
        r.inequalities.push_back(greater("Re e" + idx[j] + " > -1", p.exponents[j].real(), -1.0));
      }
      break;
    case OperatorKind::Tag::Distance:
      for (int j = 0; j < 3; ++j) {
        r.inequalities.push_back(greater("Re e" + idx[j] + " > -m", p.exponents[j].real(), -d));
      }
      r.inequalities.push_back(greater("Re(e1+e2+e3) > -2m", sum, -2.0 * d));
      break;
  }
  r.convergent = std::all_of(r.inequalities.begin(), r.inequalities.end(),
                             [](const RegionInequality& q) { return q.holds; });
  return r;
}

TraceReport trace_report(const ParamSet& p, double rel_tol, std::size_t max_terms) {
  TraceReport r;
  switch (p.kind.tag) {
    case OperatorKind::Tag::Symplectic:
      r.series = trace_series(p.kind, p.mu, rel_tol, max_terms);
      r.closed_printed = closed_symplectic(p);
      r.closed_consistent = trace_closed_T(p.kind.dim, p.mu);
      break;
    case OperatorKind::Tag::Distance:
      r.series = trace_series(p.kind, p.mu, rel_tol, max_terms, DistanceVariant::FunkHecke);
      r.series_printed = trace_series(p.kind, p.mu, rel_tol, max_terms, DistanceVariant::Printed);
      r.closed_printed = closed_distance_printed(p);
      r.closed_consistent = closed_distance_consistent(p);
      break;
    case OperatorKind::Tag::InnerProduct:
      r.series = trace_series(p.kind, p.mu, rel_tol, max_terms);
      r.closed_printed = closed_inner_printed(p.kind.dim, p.nu, rel_tol, max_terms).value;
      r.closed_consistent = closed_inner_consistent(p.kind.dim, p.mu, rel_tol, max_terms).value;
      break;
  }
  if (r.closed_printed.is_finite() && r.closed_consistent.is_finite()) {
    r.ratio = r.closed_printed.value() / r.closed_consistent.value();
  }
  if (r.series.converged && r.closed_consistent.is_finite()) {
    r.series_rel_error = std::abs(r.series.value / r.closed_consistent.value() - 1.0);
  }
  return r;
}

}  // namespace spheretrace::triple
