// Acceptance suite: runs every criterion and prints one pass/fail line per
// check.  Exit status is nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <exception>

#include "lpdm/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  bool all_pass = true;
  for (int k = 1; k <= lpdm::criteria_count(); ++k) {
    const auto t0 = clock::now();
    try {
      for (const lpdm::CheckResult& res : lpdm::run_criterion(k)) {
        all_pass = all_pass && res.pass;
        std::printf("%s %-28s observed=%-12.4g threshold=%-10.4g %s\n",
                    res.pass ? "[PASS]" : "[FAIL]", res.id.c_str(), res.observed,
                    res.threshold, res.detail.c_str());
      }
    } catch (const std::exception& e) {
      all_pass = false;
      std::printf("[FAIL] criterion %d (%s) threw: %s\n", k,
                  lpdm::criterion_name(k).c_str(), e.what());
    }
    const double sec = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("       criterion %2d (%s): %.2f s\n", k, lpdm::criterion_name(k).c_str(), sec);
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
