#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rmt {

enum class VerifyLevel { Quick, Desk, Deep };

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::string zeta_file;  // empty: the zeta criterion is skipped with a warning
  std::map<std::string, double> threshold_overrides;  // criterion id -> threshold
};

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  bool skipped = false;
  double measured = 0.0;   // worst figure across subchecks, in threshold units
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
};

// Runs the verification suite at the given tier.
//   Quick: fast sanity subset (seconds).
//   Desk:  the full acceptance battery at the standard draw counts.
//   Deep:  the same battery at 5x the Monte Carlo draws and tightened
//          deterministic tolerances.
std::vector<CriterionResult> run_verify(VerifyLevel level, const VerifyOptions& opts = {});

// One formatted line per criterion, the format the acceptance runner prints.
std::string format_result(const CriterionResult& r);

}  // namespace rmt
