#pragma once

// Generalized hypergeometric series and the two closed summation
// identities used by the trace formulas (very-well-poised 5F4 summation and
// the 6F5(-1) -> 3F2(1) transformation).

#include <cstddef>
#include <vector>

#include "spheretrace/series.hpp"
#include "spheretrace/specfun.hpp"

namespace spheretrace::hyper {

struct HyperParams {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  Complex argument{1.0, 0.0};
};

inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 100000;

/// Minimum Re(sum lower - sum upper) accepted at argument 1.
inline constexpr double kUnitArgumentGuard = 0.05;

/// Convergence excess: sum(lower) - sum(upper).
Complex convergence_excess(const HyperParams& params);

/// Index of the first upper parameter that terminates the series, i.e. the
/// smallest k such that some upper parameter equals -k.
std::optional<std::size_t> truncation_degree(const HyperParams& params);

/// pFq(upper; lower; argument) by partial sums of the Pochhammer-ratio
/// series, extrapolated at |argument| = 1.
///
/// Throws DomainError outside the convergence region or when a lower
/// parameter hits a pole before the series terminates.
SeriesResult pfq(const HyperParams& params, double rel_tol = kDefaultRelTol,
                 std::size_t max_terms = kDefaultMaxTerms);

/// 1 + a_1 = a_2 + b_1 = ... = a_p + b_q to 1e-10.
bool is_well_poised(const HyperParams& params);

/// Closed product of the well-poised 5F4 summation:
///   5F4(m-1, (m+1)/2, -x, -y, -z; (m-1)/2, x+m, y+m, z+m; 1)
///     = G(x+m) G(y+m) G(z+m) G(x+y+z+m) / (G(m) G(x+y+m) G(y+z+m) G(x+z+m)).
MeroValue dougall_rhs(Complex m, Complex x, Complex y, Complex z);

/// Parameters of the left-hand 5F4 above.
HyperParams dougall_series_params(Complex m, Complex x, Complex y, Complex z);

/// Right-hand side of
///   6F5(a, 1+a/2, b, c, d, e; a/2, 1+a-b, 1+a-c, 1+a-d, 1+a-e; -1)
///     = G(1+a-d) G(1+a-e) / (G(1+a) G(1+a-d-e))
///       * 3F2(1+a-b-c, d, e; 1+a-b, 1+a-c; 1).
SeriesResult whipple_rhs(Complex a, Complex b, Complex c, Complex d, Complex e,
                         double rel_tol = kDefaultRelTol, std::size_t max_terms = kDefaultMaxTerms);

/// Parameters of the left-hand 6F5 above, argument -1.
HyperParams whipple_series_params(Complex a, Complex b, Complex c, Complex d, Complex e);

}  // namespace spheretrace::hyper
