#pragma once

// Operator kinds and the parameter dictionary of the triple integrals.
//
// Three coordinate systems describe the same triple:
//   lambda = (l1, l2, l3)           homogeneity parameters,
//   abgd   = (a, b, g, d)           a = l1 - l2 - l3 (cyclic), d = a + b + g,
//   mu     = (m1, m2, m3)           operator parameters,
//                                   m_j = (l1 + l2 + l3 - h)/2 - l_j,
// where h is the kind's half-dimension (n, m, or N/2).  Kernel exponents
// are e_j = -m_j - h = (a_j - h)/2, so that the integrand is
//   |K(Y,Z)|^{e_1} |K(Z,X)|^{e_2} |K(X,Y)|^{e_3}.
// For the inner-product kind nu_j = -e_j / 2 (the kernel is |<y,z>|^{-2 nu}).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "spheretrace/specfun.hpp"

namespace spheretrace {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OperatorKind {
  enum class Tag { Symplectic, Distance, InnerProduct };

  Tag tag = Tag::Symplectic;
  int dim = 1;  // n for Symplectic, m for Distance, N for InnerProduct

  static OperatorKind symplectic(int n) { return {Tag::Symplectic, n}; }
  static OperatorKind distance(int m) { return {Tag::Distance, m}; }
  static OperatorKind inner_product(int N) { return {Tag::InnerProduct, N}; }

  /// Dimension of the ambient Euclidean space containing the sphere.
  int ambient_dim() const;
  /// Shift h in e = -mu - h.
  double half_dim() const;
  std::string name() const;
};

using Triple = std::array<Complex, 3>;

struct ParamSet {
  OperatorKind kind;
  Triple lambda{};
  Triple mu{};
  std::array<Complex, 4> abgd{};
  Triple exponents{};
  Triple nu{};
};

/// Any subset of the coordinate systems; at least one triple must be set.
struct ParamInput {
  OperatorKind kind;
  std::optional<Triple> lambda;
  std::optional<Triple> mu;
  std::optional<Triple> abg;
  std::optional<Complex> delta;
  std::optional<Triple> exponents;
  std::optional<Triple> nu;
};

inline constexpr double kParamConsistencyTol = 1e-10;

/// Populates every coordinate system.  Throws ValidationError when no
/// system is given, the dimension is invalid, or two given systems disagree.
ParamSet param_convert(const ParamInput& input);

ParamSet params_from_mu(OperatorKind kind, const Triple& mu);
ParamSet params_from_lambda(OperatorKind kind, const Triple& lambda);
ParamSet params_from_exponents(OperatorKind kind, const Triple& exponents);

}  // namespace spheretrace
