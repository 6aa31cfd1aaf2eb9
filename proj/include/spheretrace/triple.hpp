#pragma once

// Closed-form triple integrals over S x S x S, the spectral trace sums
// they come from, and the convergence-region predicates.
//
// Each kind has two closed forms:
//   printed     the literature display, transcribed verbatim;
//   consistent  assembled from the validated multipliers (symplectic
//               multipliers, Funk-Hecke distance multipliers, inner
//               multipliers) and the closed summations of the hyper module.
// They agree for the symplectic kind and differ by constant factors for the
// other two; the verification suite measures those factors.

#include <optional>
#include <string>
#include <vector>

#include "spheretrace/hyper.hpp"
#include "spheretrace/params.hpp"
#include "spheretrace/series.hpp"

namespace spheretrace::triple {

enum class DistanceVariant { Printed, FunkHecke };

/// Minimum Re of the trace-series tail exponent accepted before summing.
inline constexpr double kTraceTailGuard = 0.05;

MeroValue closed_symplectic(const ParamSet& p);

/// Trace of T_{mu1} T_{mu2} T_{mu3} on S^{2n-1}, closed form.
MeroValue trace_closed_T(int n, const Triple& mu);

/// Spectral sum of the trace: sum over harmonic subspaces of multiplicity
/// times the product of the three multipliers.  Throws DomainError outside
/// the convergence region.
SeriesResult trace_series(const OperatorKind& kind, const Triple& mu, double rel_tol = hyper::kDefaultRelTol,
                          std::size_t max_terms = hyper::kDefaultMaxTerms,
                          DistanceVariant variant = DistanceVariant::FunkHecke);

/// Tail exponent of the trace series (positive real part iff it converges).
Complex trace_tail_exponent(const OperatorKind& kind, const Triple& mu);

/// Product of the three symplectic multipliers at degree 0 times the
/// closed 5F4 summation; equals trace_closed_T.
MeroValue trace_dougall_assembly(int n, const Triple& mu);

MeroValue closed_distance_printed(const ParamSet& p);

/// prod_j (Funk-Hecke / symplectic multiplier ratio) * trace_closed_T(m, mu).
MeroValue closed_distance_consistent(const ParamSet& p);

/// Printed constant relating the distance trace to the symplectic one.
MeroValue comparison_constant(int m, const Triple& mu);

struct InnerClosedForm {
  MeroValue prefactor = MeroValue::zero();
  SeriesResult hypergeometric;
  MeroValue value = MeroValue::zero();
};

/// Printed closed form in the nu coordinates (kernel |<y,z>|^{-2 nu_1} ...).
InnerClosedForm closed_inner_printed(int N, const Triple& nu, double rel_tol = hyper::kDefaultRelTol,
                                     std::size_t max_terms = hyper::kDefaultMaxTerms);

/// prod_j inner_multiplier(N, 0, mu_j) times the 6F5(-1) -> 3F2(1)
/// transformation applied to the inner trace series.
InnerClosedForm closed_inner_consistent(int N, const Triple& mu, double rel_tol = hyper::kDefaultRelTol,
                                        std::size_t max_terms = hyper::kDefaultMaxTerms);

struct RegionInequality {
  std::string description;
  double lhs = 0.0;
  double bound = 0.0;
  bool holds = false;
};

struct RegionReport {
  bool convergent = false;
  std::vector<RegionInequality> inequalities;
  // Symplectic only: the same region written in alpha..delta.
  std::optional<bool> abgd_form;
  std::vector<RegionInequality> abgd_inequalities;
};

RegionReport region_check(const ParamSet& p);

struct TraceReport {
  SeriesResult series;
  std::optional<SeriesResult> series_printed;  // distance kind: printed multipliers
  MeroValue closed_printed = MeroValue::zero();
  MeroValue closed_consistent = MeroValue::zero();
  std::optional<Complex> ratio;           // closed_printed / closed_consistent
  std::optional<double> series_rel_error;  // |series / closed_consistent - 1|
};

TraceReport trace_report(const ParamSet& p, double rel_tol = hyper::kDefaultRelTol,
                         std::size_t max_terms = hyper::kDefaultMaxTerms);

}  // namespace spheretrace::triple
