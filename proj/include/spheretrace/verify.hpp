#pragma once

// The verification suite: every closed formula checked against an
// independent oracle, grouped into numbered criteria.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spheretrace/report.hpp"

namespace spheretrace::verify {

struct RunConfig {
  std::uint64_t seed = 42;
  std::uint64_t samples = 1000000;
  // Samples for the Monte Carlo check of the symplectic triple integral.
  std::uint64_t triple_samples = 10000000;
  double rel_tol = 1e-12;
  std::size_t max_terms = 100000;
  int shards = 8;
  bool deterministic = false;
};

/// Throws std::invalid_argument unless rel_tol in (0, 1e-2], samples >= 1000,
/// max_terms >= 1 and shards >= 1.
void validate(const RunConfig& config);

enum class Suite { Exact, Tolerance, Mc, Audit, All };

/// Parses exact|tolerance|mc|audit|all.
Suite parse_suite(const std::string& name);

struct CheckResult {
  std::vector<report::SuiteEntry> entries;
  std::vector<report::MeasuredConstant> constants;
};

struct Check {
  int criterion;
  std::string title;
  report::EntryKind kind;
  std::function<CheckResult(const RunConfig&)> run;
};

/// All checks in criterion order.
const std::vector<Check>& registry();

/// Title of a numbered criterion (1..10).
std::string criterion_title(int criterion);

bool suite_includes(Suite suite, report::EntryKind kind);

/// Runs the checks of the suite.  Checks that throw are recorded as failed
/// entries rather than aborting the run.
report::VerificationReport run_verification(Suite suite, const RunConfig& config);

}  // namespace spheretrace::verify
