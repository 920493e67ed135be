#include "rmt/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

std::string to_string(LawLabel label) {
  switch (label) {
    case LawLabel::F1: return "F1";
    case LawLabel::F2: return "F2";
    case LawLabel::F4: return "F4";
    case LawLabel::Gap: return "gap";
    case LawLabel::Spacing: return "spacing";
    case LawLabel::WordLimit: return "word-limit";
  }
  return "?";
}

double DistributionTable::value(double t) const {
  if (cdf.size() < 2) throw RangeError("DistributionTable: empty table");
  if (t < t_min || t > t_max) {
    throw RangeError("DistributionTable: argument outside grid [" + std::to_string(t_min) + ", " +
                     std::to_string(t_max) + "]");
  }
  const double pos = (t - t_min) / step;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= cdf.size() - 1) i = cdf.size() - 2;
  const double frac = pos - static_cast<double>(i);
  return cdf[i] + frac * (cdf[i + 1] - cdf[i]);
}

double distribution_mean(const DistributionTable& table) {
  double mean = 0.0;
  for (std::size_t i = 0; i + 1 < table.cdf.size(); ++i) {
    const double dm = table.cdf[i + 1] - table.cdf[i];
    mean += dm * 0.5 * (table.t_at(i) + table.t_at(i + 1));
  }
  return mean;
}

double distribution_variance(const DistributionTable& table) {
  const double mean = distribution_mean(table);
  double m2 = 0.0;
  for (std::size_t i = 0; i + 1 < table.cdf.size(); ++i) {
    const double dm = table.cdf[i + 1] - table.cdf[i];
    const double mid = 0.5 * (table.t_at(i) + table.t_at(i + 1));
    m2 += dm * mid * mid;
  }
  return m2 - mean * mean;
}

std::vector<double> distribution_density(const DistributionTable& table) {
  const std::size_t n = table.cdf.size();
  std::vector<double> density(n, 0.0);
  if (n < 3) return density;
  const double h = table.step;
  density[0] = (table.cdf[1] - table.cdf[0]) / h;
  density[n - 1] = (table.cdf[n - 1] - table.cdf[n - 2]) / h;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    density[i] = (table.cdf[i + 1] - table.cdf[i - 1]) / (2.0 * h);
  }
  return density;
}

double distribution_quantile(const DistributionTable& table, double u) {
  if (!(u > 0.0 && u < 1.0)) throw RangeError("distribution_quantile: u must be in (0,1)");
  // Clamp to the table's reachable range.
  const double lo_v = table.cdf.front(), hi_v = table.cdf.back();
  if (u <= lo_v) return table.t_min;
  if (u >= hi_v) return table.t_max;
  double lo = table.t_min, hi = table.t_max;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::fabs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (table.value(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DistributionTable standardized_table(const DistributionTable& table, double shift, double scale) {
  if (scale <= 0.0) throw RangeError("standardized_table: scale must be positive");
  DistributionTable out = table;
  out.t_min = (table.t_min - shift) / scale;
  out.t_max = (table.t_max - shift) / scale;
  out.step = table.step / scale;
  return out;
}

}  // namespace rmt
