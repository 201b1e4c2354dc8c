// Runs the acceptance criteria and prints one line per criterion.

#include <cstdio>
#include <string>

#include "twobridge/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  int failed = 0;
  for (const twobridge::CriterionResult& r : twobridge::run_acceptance(filter)) {
    std::printf("%s %d %s: %zu checks, %.2f s (limit %.0f s)%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.checks, r.seconds, r.time_limit, r.summary.empty() ? "" : ", ",
                r.summary.c_str());
    for (const std::string& f : r.failures) {
      std::printf("    %s\n", f.c_str());
    }
    if (r.failure_count > r.failures.size()) {
      std::printf("    ... %zu more\n", r.failure_count - r.failures.size());
    }
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
