#pragma once

#include <cstdint>
#include <vector>

#include "rmt/distribution.hpp"
#include "rmt/stats_types.hpp"

namespace rmt {

double sample_mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);  // population form (1/n)
double sample_sd(const std::vector<double>& v);

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF and the
// interpolated reference table.  Requires >= 50 observations, all inside
// the table range.
double ks_distance(const EmpiricalSample& sample, const DistributionTable& reference);

// KS distance between an empirical sample and an exact discrete law given
// as (value, probability) pairs with ascending values.
double ks_distance_discrete(const EmpiricalSample& sample,
                            const std::vector<std::pair<double, double>>& law);

// Total-variation distance between the empirical frequencies of a sample
// supported on the law's atoms and the exact law.
double tv_distance_discrete(const EmpiricalSample& sample,
                            const std::vector<std::pair<double, double>>& law);

struct PairCorrelationEstimate {
  std::vector<double> edges;          // bin edges, ascending, >= 0
  std::vector<std::uint64_t> counts;  // ordered pairs per bin
  double n_hat = 0.0;                 // accumulated windowed point count
  double window = 0.0;
  std::vector<double> normalized;     // counts / n_hat
};

// Accumulates ordered-pair difference counts over independent realizations;
// pairs never straddle realizations.  Points enter a realization's window
// when they lie within `window` of the realization's span midpoint.
class PairCorrelationAccumulator {
 public:
  PairCorrelationAccumulator(std::vector<double> edges, double window);
  void add(const std::vector<double>& values);
  PairCorrelationEstimate estimate() const;

 private:
  std::vector<double> edges_;
  double window_;
  std::vector<std::uint64_t> counts_;
  double n_hat_ = 0.0;
};

// Single-realization convenience wrapper.  window <= 0 selects the default
// 0.25 * span.
PairCorrelationEstimate pair_correlation(const EmpiricalSample& sample,
                                         const std::vector<double>& edges, double window = 0.0);

// Consecutive differences of an ascending sample.
EmpiricalSample spacing_histogram(const EmpiricalSample& sample);

// Empirical variance of the point count in deterministically placed windows
// of each length s, pooled over realizations.
std::vector<double> number_variance_estimate(const std::vector<std::vector<double>>& realizations,
                                             const std::vector<double>& s_values,
                                             int placements_per_realization = 64);

struct StandardizeResult {
  EmpiricalSample sample;
  double mean = 0.0;
  double sd = 1.0;  // the affine map applied: x -> (x - mean)/sd
};

StandardizeResult standardize(const EmpiricalSample& sample);

}  // namespace rmt
