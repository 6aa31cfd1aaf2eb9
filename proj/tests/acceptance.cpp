// Runs the full verification suite and prints one verdict per criterion.
// Every entry, audit ones included, must hold for a criterion to pass.

#include <cstdio>
#include <map>

#include "spheretrace/verify.hpp"

int main() {
  namespace v = spheretrace::verify;
  const auto rep = v::run_verification(v::Suite::All, v::RunConfig{});

  std::map<int, std::pair<int, int>> tally;  // criterion -> (entries, failures)
  for (const auto& e : rep.suite) {
    auto& t = tally[e.criterion];
    ++t.first;
    if (!e.pass) {
      ++t.second;
      std::printf("  failed entry (%d): %s; %s\n", e.criterion, e.name.c_str(), e.details.c_str());
    }
  }
  int failed = 0;
  for (int c = 1; c <= 10; ++c) {
    const auto it = tally.find(c);
    const bool pass = it != tally.end() && it->second.first > 0 && it->second.second == 0;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%d entries)\n", pass ? "PASS" : "FAIL", c, v::criterion_title(c).c_str(),
                it == tally.end() ? 0 : it->second.first);
  }
  for (const auto& k : rep.constants) {
    std::printf("  measured %s dim %d: %.12g (predicted %.12g, spread %.3g)\n", k.theorem.c_str(), k.dim, k.measured,
                k.predicted, k.spread);
  }
  return failed == 0 ? 0 : 1;
}
