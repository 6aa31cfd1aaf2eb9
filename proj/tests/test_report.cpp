#include <gtest/gtest.h>

#include <cmath>

#include "spheretrace/report.hpp"
#include "spheretrace/verify.hpp"

using namespace spheretrace;
using namespace spheretrace::report;

namespace {

VerificationReport sample_report() {
  VerificationReport r;
  SuiteEntry a;
  a.name = "closed form, \"quoted\"";
  a.criterion = 1;
  a.kind = EntryKind::Tolerance;
  a.expected = 23.25470751022486;
  a.observed = 23.254707510224858;
  a.pass = true;
  a.details = "relative error 1e-16";
  SuiteEntry b;
  b.name = "mc";
  b.criterion = 6;
  b.kind = EntryKind::McSigma;
  b.expected = -1.5;
  b.observed = std::nan("");
  b.sigma = 0.003;
  b.pass = false;
  SuiteEntry c;
  c.name = "audit";
  c.criterion = 9;
  c.kind = EntryKind::ConstantAudit;
  c.pass = false;
  r.suite = {a, b, c};
  r.constants = {{"distance-triple", 2, 588.1, 1e-3, 587.97}};
  r.env = {42, 1000000, "0.1.0", 1234.5};
  return r;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  const VerificationReport r = sample_report();
  EXPECT_EQ(parse_json(render_json(r)), r);
  VerificationReport d = r;
  d.env.wall_ms.reset();
  EXPECT_EQ(parse_json(render_json(d)), d);
}

TEST(Report, AuditEntriesDoNotFailTheSuite) {
  VerificationReport r = sample_report();
  EXPECT_FALSE(r.all_pass());
  r.suite[1].pass = true;
  EXPECT_TRUE(r.all_pass());
  EXPECT_NE(render_json(r).find("\"all_pass\": true"), std::string::npos);
}

TEST(Report, MalformedJsonThrows) {
  EXPECT_THROW(parse_json("{"), std::invalid_argument);
  EXPECT_THROW(parse_json("{\"suite\": []}"), std::invalid_argument);
  EXPECT_THROW(parse_json(R"({"suite":[{"name":"x","kind":"bogus","expected":0,"observed":0,"pass":true}],"constants":[],"env":{"seed":1}})"),
               std::invalid_argument);
}

TEST(Report, CsvHasFixedHeaderAndOneRowPerEntry) {
  const std::string csv = render_csv(sample_report());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("\"closed form, \"\"quoted\"\"\""), std::string::npos);
}

TEST(Report, TextVerdicts) {
  const std::string text = render_text(sample_report());
  EXPECT_NE(text.find("[PASS]"), std::string::npos);
  EXPECT_NE(text.find("[FAIL]"), std::string::npos);
  EXPECT_NE(text.find("[NOTE]"), std::string::npos);
  EXPECT_NE(text.find("FAILURES PRESENT"), std::string::npos);
}

TEST(Verify, ConfigValidation) {
  verify::RunConfig c;
  EXPECT_NO_THROW(verify::validate(c));
  c.rel_tol = 0.0;
  EXPECT_THROW(verify::validate(c), std::invalid_argument);
  c.rel_tol = 0.02;
  EXPECT_THROW(verify::validate(c), std::invalid_argument);
  c = {};
  c.samples = 999;
  EXPECT_THROW(verify::validate(c), std::invalid_argument);
  EXPECT_THROW(verify::parse_suite("everything"), std::invalid_argument);
}

TEST(Verify, ExactSuitePassesAndIsDeterministic) {
  verify::RunConfig c;
  c.deterministic = true;
  const auto a = verify::run_verification(verify::Suite::Exact, c);
  const auto b = verify::run_verification(verify::Suite::Exact, c);
  EXPECT_TRUE(a.all_pass());
  EXPECT_FALSE(a.suite.empty());
  for (const auto& e : a.suite) EXPECT_EQ(e.kind, EntryKind::Exact);
  EXPECT_EQ(render_json(a), render_json(b));
}

TEST(Verify, McSuiteReproducible) {
  verify::RunConfig c;
  c.deterministic = true;
  c.samples = 20000;
  c.triple_samples = 20000;
  const auto a = verify::run_verification(verify::Suite::Mc, c);
  const auto b = verify::run_verification(verify::Suite::Mc, c);
  EXPECT_EQ(render_json(a), render_json(b));
  c.seed = 43;
  EXPECT_NE(render_json(a), render_json(verify::run_verification(verify::Suite::Mc, c)));
}

TEST(Verify, RegistryCoversEveryCriterion) {
  for (int c = 1; c <= 10; ++c) {
    bool found = false;
    for (const auto& check : verify::registry()) found = found || check.criterion == c;
    EXPECT_TRUE(found) << c;
    EXPECT_NE(verify::criterion_title(c), "unknown");
  }
}
