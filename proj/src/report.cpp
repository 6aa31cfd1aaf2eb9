#include "spheretrace/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace spheretrace::report {

namespace {

using nlohmann::json;

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

double read_number(const json& j) {
  if (j.is_null()) return std::nan("");
  return j.get<double>();
}

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::Exact:
      return "exact";
    case EntryKind::Tolerance:
      return "tolerance";
    case EntryKind::McSigma:
      return "mc-sigma";
    case EntryKind::ConstantAudit:
      return "constant-audit";
  }
  return "unknown";
}

EntryKind parse_kind(const std::string& name) {
  if (name == "exact") return EntryKind::Exact;
  if (name == "tolerance") return EntryKind::Tolerance;
  if (name == "mc-sigma") return EntryKind::McSigma;
  if (name == "constant-audit") return EntryKind::ConstantAudit;
  throw std::invalid_argument("unknown entry kind: " + name);
}

bool SuiteEntry::operator==(const SuiteEntry& o) const {
  const bool sigma_same = sigma.has_value() == o.sigma.has_value() && (!sigma || same(*sigma, *o.sigma));
  return name == o.name && criterion == o.criterion && kind == o.kind && same(expected, o.expected) &&
         same(observed, o.observed) && sigma_same && pass == o.pass && details == o.details;
}

bool MeasuredConstant::operator==(const MeasuredConstant& o) const {
  return theorem == o.theorem && dim == o.dim && same(measured, o.measured) && same(spread, o.spread) &&
         same(predicted, o.predicted);
}

bool VerificationReport::all_pass() const {
  for (const auto& e : suite) {
    if (e.kind != EntryKind::ConstantAudit && !e.pass) return false;
  }
  return true;
}

std::string render_json(const VerificationReport& report) {
  json j;
  j["suite"] = json::array();
  for (const auto& e : report.suite) {
    json row = {{"name", e.name},           {"criterion", e.criterion}, {"kind", kind_name(e.kind)},
                {"expected", number(e.expected)}, {"observed", number(e.observed)}, {"pass", e.pass},
                {"details", e.details}};
    if (e.sigma) row["sigma"] = number(*e.sigma);
    j["suite"].push_back(row);
  }
  j["constants"] = json::array();
  for (const auto& c : report.constants) {
    j["constants"].push_back({{"theorem", c.theorem},
                              {"dim", c.dim},
                              {"measured", number(c.measured)},
                              {"spread", number(c.spread)},
                              {"predicted", number(c.predicted)}});
  }
  j["env"] = {{"seed", report.env.seed}, {"samples", report.env.samples}, {"version", report.env.version}};
  if (report.env.wall_ms) j["env"]["wall_ms"] = *report.env.wall_ms;
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

VerificationReport parse_json(const std::string& text) {
  VerificationReport r;
  try {
    const json j = json::parse(text);
    for (const auto& row : j.at("suite")) {
      SuiteEntry e;
      e.name = row.at("name").get<std::string>();
      e.criterion = row.value("criterion", 0);
      e.kind = parse_kind(row.at("kind").get<std::string>());
      e.expected = read_number(row.at("expected"));
      e.observed = read_number(row.at("observed"));
      if (row.contains("sigma")) e.sigma = read_number(row.at("sigma"));
      e.pass = row.at("pass").get<bool>();
      e.details = row.value("details", std::string());
      r.suite.push_back(e);
    }
    for (const auto& row : j.at("constants")) {
      MeasuredConstant c;
      c.theorem = row.at("theorem").get<std::string>();
      c.dim = row.at("dim").get<int>();
      c.measured = read_number(row.at("measured"));
      c.spread = read_number(row.at("spread"));
      c.predicted = row.contains("predicted") ? read_number(row.at("predicted")) : std::nan("");
      r.constants.push_back(c);
    }
    const json& env = j.at("env");
    r.env.seed = env.at("seed").get<std::uint64_t>();
    r.env.samples = env.value("samples", std::uint64_t{0});
    r.env.version = env.value("version", std::string());
    if (env.contains("wall_ms")) r.env.wall_ms = env.at("wall_ms").get<double>();
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
  return r;
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& e : report.suite) {
    os << e.criterion << ',' << csv_field(e.name) << ',' << kind_name(e.kind) << ',' << fmt(e.expected) << ','
       << fmt(e.observed) << ',' << (e.sigma ? fmt(*e.sigma) : "") << ',' << (e.pass ? "true" : "false") << ','
       << csv_field(e.details) << "\n";
  }
  return os.str();
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& e : report.suite) {
    const char* verdict = e.pass ? "PASS" : (e.kind == EntryKind::ConstantAudit ? "NOTE" : "FAIL");
    os << "[" << verdict << "] (" << e.criterion << ", " << kind_name(e.kind) << ") " << e.name << "\n"
       << "        expected " << fmt(e.expected) << "  observed " << fmt(e.observed);
    if (e.sigma) os << "  sigma " << fmt(*e.sigma);
    os << "\n";
    if (!e.details.empty()) os << "        " << e.details << "\n";
  }
  if (!report.constants.empty()) {
    os << "\nmeasured constants (closed form as printed vs oracle):\n";
    for (const auto& c : report.constants) {
      os << "  " << c.theorem << " dim " << c.dim << ": measured " << fmt(c.measured) << "  predicted "
         << fmt(c.predicted) << "  relative spread " << fmt(c.spread) << "\n";
    }
  }
  os << "\nseed " << report.env.seed << ", samples " << report.env.samples;
  if (report.env.wall_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", *report.env.wall_ms);
    os << ", wall " << buf << " ms";
  }
  os << "\n" << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace spheretrace::report
