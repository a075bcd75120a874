// Acceptance suite runner: one pass/fail line per criterion.

#include <cstdio>

#include "equicobar/acceptance.hpp"

int main() {
  auto results = eqc::run_acceptance();
  bool all = true;
  double total = 0;
  for (auto& r : results) {
    all = all && r.pass;
    total += r.seconds;
    std::printf("%s  %2d %-28s (%.2fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.details.c_str());
  }
  std::printf("%s: %zu criteria in %.2fs\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              results.size(), total);
  return all ? 0 : 1;
}
