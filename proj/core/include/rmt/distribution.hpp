#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rmt {

enum class LawLabel { F1, F2, F4, Gap, Spacing, WordLimit };

std::string to_string(LawLabel label);

// Tabulated CDF on a uniform grid with monotone (linear) interpolation.
struct DistributionTable {
  double t_min = 0.0;
  double t_max = 0.0;
  double step = 0.0;
  std::vector<double> cdf;
  LawLabel label = LawLabel::F2;

  std::size_t size() const { return cdf.size(); }
  double t_at(std::size_t i) const { return t_min + step * static_cast<double>(i); }

  // F(t) by linear interpolation; throws RangeError outside [t_min, t_max].
  double value(double t) const;

  bool covers(double t) const { return t >= t_min && t <= t_max; }
};

// Mean and variance of the distribution via the midpoint Stieltjes sum
// over the table increments.
double distribution_mean(const DistributionTable& table);
double distribution_variance(const DistributionTable& table);

// Density by centered differences (one-sided at the ends).
std::vector<double> distribution_density(const DistributionTable& table);

// Inverse CDF by bisection on the interpolated table (u in (0,1)).
double distribution_quantile(const DistributionTable& table, double u);

// Rescales the abscissa: returns the table of X' = (X - shift) / scale.
DistributionTable standardized_table(const DistributionTable& table, double shift, double scale);

}  // namespace rmt
