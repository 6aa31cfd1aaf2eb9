#pragma once

// Complex gamma-function kernel with explicit pole bookkeeping.
//
// Every closed-form expression in the library is a product of gamma
// ratios.  Many of the interesting parameter points sit exactly on gamma
// poles (polynomial kernels, constant kernels), so ratios are evaluated
// through GammaRatioExpr, which cancels numerator/denominator pole pairs
// by their Pochhammer limits and reports the meromorphic outcome as a
// MeroValue instead of producing NaN.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace spheretrace {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Default tolerance for deciding that an argument sits on a gamma pole.
inline constexpr double kPoleTol = 1e-9;

/// Raised when an operation is evaluated outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Value of a meromorphic expression at a point: finite, a zero, or a pole.
class MeroValue {
 public:
  enum class Tag { Finite, Zero, Pole };

  static MeroValue finite(Complex v);
  static MeroValue zero() { return MeroValue(Tag::Zero, {}); }
  static MeroValue pole() { return MeroValue(Tag::Pole, {}); }

  Tag tag() const { return tag_; }
  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_zero() const { return tag_ == Tag::Zero; }
  bool is_pole() const { return tag_ == Tag::Pole; }

  /// Numeric payload; Zero maps to 0, Pole throws DomainError.
  Complex value() const;

  /// Product with structural rules (0 * pole is indeterminate and throws).
  MeroValue operator*(const MeroValue& other) const;
  MeroValue operator*(Complex scale) const;
  MeroValue operator/(const MeroValue& other) const;

  std::string to_string() const;

 private:
  MeroValue(Tag t, Complex v) : tag_(t), value_(v) {}

  Tag tag_;
  Complex value_;
};

const char* tag_name(MeroValue::Tag tag);

/// A prefactor times a product of Gamma(numerator) over Gamma(denominator).
struct GammaRatioExpr {
  std::vector<Complex> numerator_args;
  std::vector<Complex> denominator_args;
  Complex prefactor{1.0, 0.0};
};

/// True iff z lies within tol (both components) of a nonpositive integer.
bool is_gamma_pole(Complex z, double tol = kPoleTol);

/// Principal-branch log Gamma.  Throws DomainError on a pole.
///
/// For Re z >= 1/2 the imaginary part is the continuous branch; in the
/// reflected half-plane it is only defined modulo 2*pi, which is all the
/// exponentiating callers need.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// sin(pi z) with exact reduction of the real part.
Complex sin_pi(Complex z);

/// Rising factorial (a)_l = a (a+1) ... (a+l-1).
Complex pochhammer(Complex a, unsigned l);

/// Evaluate a gamma ratio with pole pairs cancelled.
///
/// Numerator and denominator poles are paired greedily (sorted by real
/// part, nearest integer offset first).  A pair Gamma(-a)/Gamma(-b) is
/// replaced by its limit under a common shift, (-1)^(a-b) b!/a!.  Unmatched
/// numerator poles give Pole, unmatched denominator poles give Zero.
MeroValue eval_gamma_ratio(const GammaRatioExpr& expr, double pole_tol = kPoleTol);

}  // namespace spheretrace
