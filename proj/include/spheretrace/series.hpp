#pragma once

// Summation of slowly convergent series with known tail asymptotics.
//
// Series at unit argument (hypergeometric series at z = +-1, spectral trace
// sums) have terms that are gamma ratios in the summation index, so their
// tails expand as L^{-p} (c0 + c1/L + c2/L^2 + ...) with a known leading
// exponent p.  Partial sums are recorded at L = L0 * 2^i and extrapolated
// by Richardson elimination of the exponents p, p+1, p+2, ...

#include <cstddef>
#include <functional>
#include <optional>

#include "spheretrace/specfun.hpp"

namespace spheretrace {

struct SeriesResult {
  Complex value{0.0, 0.0};
  std::size_t terms_used = 0;
  // Magnitude of the last summed term, or of the last extrapolation
  // correction when the value was accelerated.
  double last_term_mag = 0.0;
  bool converged = false;
  bool accelerated = false;
};

enum class TailKind {
  Geometric,    // |t_{l+1} / t_l| -> modulus < 1
  Algebraic,    // same-sign terms, tail ~ L^{-exponent}
  Alternating,  // sign-alternating terms, even-L tail ~ L^{-exponent}
  Oscillating,  // unimodular ratio z != +-1, tail ~ t_L / (1 - z)
};

struct TailModel {
  TailKind kind = TailKind::Geometric;
  Complex exponent{1.0, 0.0};
  double modulus = 0.0;
  Complex ratio{1.0, 0.0};
};

struct SeriesOptions {
  double rel_tol = 1e-12;
  std::size_t max_terms = 100000;
  std::size_t first_checkpoint = 32;
};

/// Sums term(0) + term(1) + ...; term is called with consecutive indices.
/// If last_index is set, terms beyond it are known to vanish.
SeriesResult sum_series(const std::function<Complex(std::size_t)>& term, const TailModel& tail,
                        std::optional<std::size_t> last_index, const SeriesOptions& options);

}  // namespace spheretrace
