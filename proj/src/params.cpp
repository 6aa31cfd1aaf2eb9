#include "spheretrace/params.hpp"

#include <cmath>

namespace spheretrace {

int OperatorKind::ambient_dim() const {
  switch (tag) {
    case Tag::Symplectic:
      return 2 * dim;
    case Tag::Distance:
      return dim + 1;
    case Tag::InnerProduct:
      return dim;
  }
  return dim;
}

double OperatorKind::half_dim() const {
  return tag == Tag::InnerProduct ? 0.5 * dim : static_cast<double>(dim);
}

std::string OperatorKind::name() const {
  switch (tag) {
    case Tag::Symplectic:
      return "symplectic";
    case Tag::Distance:
      return "distance";
    case Tag::InnerProduct:
      return "inner";
  }
  return "unknown";
}

namespace {

void check_kind(const OperatorKind& kind) {
  if (kind.dim < 1) throw ValidationError("dimension parameter must be >= 1");
}

Triple lambda_from_abg(const Triple& abg) {
  const Complex a = abg[0], b = abg[1], g = abg[2];
  return {-(b + g) / 2.0, -(a + g) / 2.0, -(a + b) / 2.0};
}

Triple mu_from_lambda(const Triple& lambda, double h) {
  const Complex s = lambda[0] + lambda[1] + lambda[2];
  Triple mu;
  for (int j = 0; j < 3; ++j) mu[j] = (s - h) / 2.0 - lambda[j];
  return mu;
}

// Inverse of mu_from_lambda: sum(mu) = (sum(lambda) - 3h)/2, so
// sum(lambda) = 2 sum(mu) + 3h and l_j = (sum(lambda) - h)/2 - m_j.
Triple lambda_from_mu(const Triple& mu, double h) {
  const Complex s = 2.0 * (mu[0] + mu[1] + mu[2]) + 3.0 * h;
  Triple lambda;
  for (int j = 0; j < 3; ++j) lambda[j] = (s - h) / 2.0 - mu[j];
  return lambda;
}

bool close(const Triple& a, const Triple& b) {
  for (int j = 0; j < 3; ++j) {
    if (std::abs(a[j] - b[j]) > kParamConsistencyTol * (1.0 + std::abs(a[j]))) return false;
  }
  return true;
}

}  // namespace

ParamSet params_from_mu(OperatorKind kind, const Triple& mu) {
  check_kind(kind);
  const double h = kind.half_dim();
  ParamSet p;
  p.kind = kind;
  p.mu = mu;
  p.lambda = lambda_from_mu(mu, h);
  const Triple& l = p.lambda;
  p.abgd = {l[0] - l[1] - l[2], l[1] - l[0] - l[2], l[2] - l[0] - l[1], -(l[0] + l[1] + l[2])};
  for (int j = 0; j < 3; ++j) {
    p.exponents[j] = -mu[j] - h;
    p.nu[j] = -p.exponents[j] / 2.0;
  }
  return p;
}

ParamSet params_from_lambda(OperatorKind kind, const Triple& lambda) {
  check_kind(kind);
  return params_from_mu(kind, mu_from_lambda(lambda, kind.half_dim()));
}

ParamSet params_from_exponents(OperatorKind kind, const Triple& exponents) {
  check_kind(kind);
  const double h = kind.half_dim();
  return params_from_mu(kind, {-exponents[0] - h, -exponents[1] - h, -exponents[2] - h});
}

ParamSet param_convert(const ParamInput& input) {
  check_kind(input.kind);
  const OperatorKind kind = input.kind;

  std::optional<ParamSet> result;
  auto merge = [&](const ParamSet& candidate, const char* source) {
    if (!result) {
      result = candidate;
    } else if (!close(result->mu, candidate.mu)) {
      throw ValidationError(std::string("inconsistent parameters: ") + source +
                            " disagrees with the other given coordinates");
    }
  };

  if (input.lambda) merge(params_from_lambda(kind, *input.lambda), "lambda");
  if (input.mu) merge(params_from_mu(kind, *input.mu), "mu");
  if (input.abg) {
    merge(params_from_lambda(kind, lambda_from_abg(*input.abg)), "alpha/beta/gamma");
  }
  if (input.exponents) merge(params_from_exponents(kind, *input.exponents), "exponents");
  if (input.nu) {
    const Triple& nu = *input.nu;
    merge(params_from_exponents(kind, {-2.0 * nu[0], -2.0 * nu[1], -2.0 * nu[2]}), "nu");
  }
  if (!result) throw ValidationError("no complete coordinate triple given (lambda, mu, alpha/beta/gamma, exponents or nu)");
  if (input.delta) {
    const Complex d = result->abgd[3];
    if (std::abs(*input.delta - d) > kParamConsistencyTol * (1.0 + std::abs(d))) {
      throw ValidationError("inconsistent parameters: delta must equal alpha + beta + gamma");
    }
  }
  return *result;
}

}  // namespace spheretrace
