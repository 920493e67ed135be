// Acceptance battery: runs every verification criterion at the desk tier
// and prints one pass/fail line per criterion.  The optional zeta criterion
// reads its zero table from RMT_ZETA_FILE when set.

#include <cstdlib>
#include <iostream>

#include "rmt/verify.hpp"

int main() {
  rmt::VerifyOptions opts;
  opts.seed = 1;
  if (const char* zf = std::getenv("RMT_ZETA_FILE")) opts.zeta_file = zf;

  const std::vector<rmt::CriterionResult> results =
      rmt::run_verify(rmt::VerifyLevel::Desk, opts);
  bool all_pass = true;
  for (const rmt::CriterionResult& r : results) {
    std::cout << rmt::format_result(r) << std::endl;
    if (!r.pass) all_pass = false;
  }
  std::cout << (all_pass ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
  return all_pass ? 0 : 1;
}
