#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rmt/stats_types.hpp"

namespace rmt {

struct ZeroTable {
  std::vector<double> gammas;  // strictly ascending, positive
  std::string source;
};

// One decimal value per line; blank lines and lines starting with '#' are
// ignored.  Throws ParseError (with the line number) on junk or
// non-ascending data, InsufficientDataError on an empty table.
ZeroTable load_zeros(const std::string& path);

// gamma -> gamma * log(gamma) / (2 pi); requires every gamma > e.
EmpiricalSample unfold_zeros(const ZeroTable& table);

struct ZetaBinDelta {
  double a = 0.0;
  double b = 0.0;
  double estimate = 0.0;
  double reference = 0.0;
  double delta = 0.0;
};

struct ZetaReport {
  std::size_t zeros_total = 0;
  std::size_t zeros_skipped = 0;
  std::size_t zeros_used = 0;
  double mean_spacing = 0.0;
  double spacing_ks = 0.0;
  double max_pair_delta = 0.0;
  std::vector<ZetaBinDelta> pair_correlation;
  double pair_threshold = 0.05;
  double spacing_threshold = 0.05;
  bool pass_pair = false;
  bool pass_spacing = false;
  double window = 0.0;
};

// Pair-correlation and nearest-neighbor spacing comparison against the bulk
// predictions.  Requires >= 10^4 zeros after the skip; the default skip
// drops the lowest 1000 zeros, where the asymptotic regime is poorest.
ZetaReport zeta_report(const ZeroTable& table, std::size_t skip = 1000, double bin_width = 0.25,
                       double bin_max = 3.0);

}  // namespace rmt
