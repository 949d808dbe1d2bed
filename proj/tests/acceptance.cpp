// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any
// criterion fails.
#include <cstdio>
#include <cstdlib>

#include "kaut/selftest.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  int failed = 0;
  kaut::selftest::run_all(seed, [&](const kaut::selftest::CriterionResult& r) {
    std::printf("%s [%d] %s: %zu checks, %zu failures, %.2f s", r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.cases, r.failures, r.seconds);
    if (r.budget_seconds > 0) std::printf(" (limit %.0f s)", r.budget_seconds);
    if (!r.first_failure.empty()) std::printf(" -- first failure: %s", r.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  });
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
