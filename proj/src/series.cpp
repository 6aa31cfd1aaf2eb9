#include "spheretrace/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spheretrace {

namespace {

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_component(sum_re_, comp_re_, x.real());
    add_component(sum_im_, comp_im_, x.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0.0;
  double comp_re_ = 0.0;
  double sum_im_ = 0.0;
  double comp_im_ = 0.0;
};

struct Extrapolation {
  Complex value;
  double last_correction;
  double previous_correction;
};

// Romberg-style table on partial sums at L0 * 2^i; returns the fully
// eliminated estimate and the last two diagonal differences.
Extrapolation richardson(const std::vector<Complex>& checkpoints, Complex exponent) {
  const std::size_t k = checkpoints.size();
  std::vector<std::vector<Complex>> table(k);
  for (std::size_t i = 0; i < k; ++i) {
    table[i].resize(i + 1);
    table[i][0] = checkpoints[i];
    for (std::size_t j = 1; j <= i; ++j) {
      const Complex f = std::pow(Complex(2.0, 0.0), exponent + static_cast<double>(j - 1));
      table[i][j] = (f * table[i][j - 1] - table[i - 1][j - 1]) / (f - 1.0);
    }
  }
  Extrapolation e{table[k - 1][k - 1], 0.0, 0.0};
  if (k >= 2) e.last_correction = std::abs(table[k - 1][k - 1] - table[k - 2][k - 2]);
  if (k >= 3) e.previous_correction = std::abs(table[k - 2][k - 2] - table[k - 3][k - 3]);
  return e;
}

}  // namespace

SeriesResult sum_series(const std::function<Complex(std::size_t)>& term, const TailModel& tail,
                        std::optional<std::size_t> last_index, const SeriesOptions& options) {
  if (!(options.rel_tol > 0.0)) throw std::invalid_argument("sum_series: rel_tol must be positive");
  if (options.max_terms == 0) throw std::invalid_argument("sum_series: max_terms must be positive");
  if (options.first_checkpoint < 2 || options.first_checkpoint % 2 != 0) {
    throw std::invalid_argument("sum_series: first checkpoint must be even and >= 2");
  }
  const bool extrapolate = tail.kind == TailKind::Algebraic || tail.kind == TailKind::Alternating;
  if (extrapolate && !(tail.exponent.real() > 0.0)) {
    throw DomainError("sum_series: tail exponent must have positive real part");
  }
  if (tail.kind == TailKind::Geometric && !(tail.modulus < 1.0)) {
    throw DomainError("sum_series: geometric tail requires modulus < 1");
  }

  SeriesResult result;
  CompensatedSum sum;
  std::vector<Complex> checkpoints;
  std::size_t next_checkpoint = options.first_checkpoint;
  int small_run = 0;
  Complex best_extrapolated{0.0, 0.0};
  bool have_extrapolated = false;

  for (std::size_t l = 0; l < options.max_terms; ++l) {
    if (last_index && l > *last_index) {
      result.value = sum.value();
      result.converged = true;
      return result;
    }
    const Complex t = term(l);
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
      throw DomainError("sum_series: non-finite term");
    }
    sum.add(t);
    const std::size_t summed = l + 1;
    result.terms_used = summed;
    result.last_term_mag = std::abs(t);
    const Complex s = sum.value();
    const double scale = options.rel_tol * std::abs(s);

    small_run = result.last_term_mag <= scale ? small_run + 1 : 0;
    if (small_run >= 3 && !last_index) {
      bool tail_ok = false;
      switch (tail.kind) {
        case TailKind::Geometric:
          tail_ok = result.last_term_mag * tail.modulus / (1.0 - tail.modulus) <= scale;
          break;
        case TailKind::Algebraic:
          tail_ok = result.last_term_mag * static_cast<double>(summed) / tail.exponent.real() <= scale;
          break;
        case TailKind::Alternating:
          tail_ok = true;
          break;
        case TailKind::Oscillating:
          tail_ok = result.last_term_mag / std::abs(1.0 - tail.ratio) <= scale;
          break;
      }
      if (tail_ok) {
        result.value = s;
        result.converged = true;
        return result;
      }
    }

    if (extrapolate && !last_index && summed == next_checkpoint) {
      checkpoints.push_back(s);
      next_checkpoint *= 2;
      if (checkpoints.size() >= 3) {
        const Extrapolation e = richardson(checkpoints, tail.exponent);
        best_extrapolated = e.value;
        have_extrapolated = true;
        const double target = options.rel_tol * std::abs(e.value);
        if (e.last_correction <= target && e.previous_correction <= target) {
          result.value = e.value;
          result.last_term_mag = e.last_correction;
          result.converged = true;
          result.accelerated = true;
          return result;
        }
      }
    }
  }

  result.value = have_extrapolated ? best_extrapolated : sum.value();
  result.accelerated = have_extrapolated;
  result.converged = last_index.has_value() && *last_index < options.max_terms;
  return result;
}

}  // namespace spheretrace
