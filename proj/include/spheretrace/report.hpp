#pragma once

// Verification report model and its JSON / CSV / text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spheretrace::report {

enum class EntryKind { Exact, Tolerance, McSigma, ConstantAudit };

const char* kind_name(EntryKind kind);
EntryKind parse_kind(const std::string& name);

struct SuiteEntry {
  std::string name;
  int criterion = 0;
  EntryKind kind = EntryKind::Exact;
  double expected = 0.0;
  double observed = 0.0;
  std::optional<double> sigma;
  bool pass = false;
  std::string details;

  bool operator==(const SuiteEntry& other) const;
};

struct MeasuredConstant {
  std::string theorem;
  int dim = 0;
  double measured = 0.0;
  double spread = 0.0;
  double predicted = 0.0;

  bool operator==(const MeasuredConstant& other) const;
};

struct Environment {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string version;
  std::optional<double> wall_ms;  // omitted in deterministic mode

  bool operator==(const Environment& other) const = default;
};

struct VerificationReport {
  std::vector<SuiteEntry> suite;
  std::vector<MeasuredConstant> constants;
  Environment env;

  /// Conjunction over non-audit entries.
  bool all_pass() const;

  bool operator==(const VerificationReport& other) const = default;
};

std::string render_json(const VerificationReport& report);
/// Throws std::invalid_argument on malformed input.
VerificationReport parse_json(const std::string& text);

inline constexpr const char* kCsvHeader = "criterion,name,kind,expected,observed,sigma,pass,details";
std::string render_csv(const VerificationReport& report);

std::string render_text(const VerificationReport& report);

}  // namespace spheretrace::report
