#include "rmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rmt/errors.hpp"

namespace rmt {

double sample_mean(const std::vector<double>& v) {
  if (v.empty()) throw InsufficientDataError("sample_mean: empty sample");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) { return std::sqrt(sample_variance(v)); }

double ks_distance(const EmpiricalSample& sample, const DistributionTable& reference) {
  if (sample.values.size() < 50) {
    throw InsufficientDataError("ks_distance: need at least 50 observations");
  }
  std::vector<double> sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());
  if (!reference.covers(sorted.front()) || !reference.covers(sorted.back())) {
    throw RangeError("ks_distance: reference grid does not cover the sample range");
  }
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = reference.value(sorted[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ks_distance_discrete(const EmpiricalSample& sample,
                            const std::vector<std::pair<double, double>>& law) {
  if (sample.values.empty()) throw InsufficientDataError("ks_distance_discrete: empty sample");
  std::vector<double> sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  double cdf = 0.0;
  std::size_t i = 0;
  for (const auto& [value, prob] : law) {
    // Empirical CDF just below this atom vs the law's CDF below it.
    while (i < sorted.size() && sorted[i] < value - 1e-12) ++i;
    d = std::max(d, std::fabs(static_cast<double>(i) / n - cdf));
    cdf += prob;
    while (i < sorted.size() && sorted[i] <= value + 1e-12) ++i;
    d = std::max(d, std::fabs(static_cast<double>(i) / n - cdf));
  }
  return d;
}

double tv_distance_discrete(const EmpiricalSample& sample,
                            const std::vector<std::pair<double, double>>& law) {
  if (sample.values.empty()) throw InsufficientDataError("tv_distance_discrete: empty sample");
  std::map<long long, double> freq;
  const double inv = 1.0 / static_cast<double>(sample.values.size());
  for (double v : sample.values) freq[std::llround(v * 1e9)] += inv;
  double tv = 0.0;
  for (const auto& [value, prob] : law) {
    const long long key = std::llround(value * 1e9);
    auto it = freq.find(key);
    const double f = it == freq.end() ? 0.0 : it->second;
    tv += std::fabs(f - prob);
    if (it != freq.end()) freq.erase(it);
  }
  for (const auto& [key, f] : freq) tv += f;  // sample mass off the law's support
  return 0.5 * tv;
}

PairCorrelationAccumulator::PairCorrelationAccumulator(std::vector<double> edges, double window)
    : edges_(std::move(edges)), window_(window) {
  if (edges_.size() < 2) throw RangeError("PairCorrelationAccumulator: need >= 2 edges");
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] <= edges_[i - 1]) {
      throw RangeError("PairCorrelationAccumulator: edges must be ascending");
    }
  }
  if (edges_.front() < 0.0) {
    throw RangeError("PairCorrelationAccumulator: edges must be nonnegative");
  }
  if (!(window_ > 0.0)) throw RangeError("PairCorrelationAccumulator: window must be positive");
  counts_.assign(edges_.size() - 1, 0);
}

void PairCorrelationAccumulator::add(const std::vector<double>& values) {
  if (values.empty()) return;
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  const double center = 0.5 * (v.front() + v.back());
  if (v.back() - v.front() < 2.0 * window_ - 1e-12 && values.size() > 1) {
    throw RangeError("pair_correlation: window larger than the data span");
  }
  std::vector<double> w;
  w.reserve(v.size());
  for (double x : v) {
    if (std::fabs(x - center) <= window_) w.push_back(x);
  }
  n_hat_ += static_cast<double>(w.size());
  // counts of ordered pairs with 0 <= a < w_i - w_j < b: two-pointer count of
  // pairs below each edge, then difference adjacent edges.
  const std::size_t m = w.size();
  std::vector<double> below(edges_.size(), 0.0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const double x = edges_[e];
    std::uint64_t cnt = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < m; ++i) {
      while (j < i && w[i] - w[j] >= x) ++j;
      cnt += i - j;  // pairs (i, j') with j' in [j, i): difference < x
    }
    below[e] = static_cast<double>(cnt);
  }
  for (std::size_t b = 0; b + 1 < edges_.size(); ++b) {
    counts_[b] += static_cast<std::uint64_t>(below[b + 1] - below[b]);
  }
}

PairCorrelationEstimate PairCorrelationAccumulator::estimate() const {
  PairCorrelationEstimate est;
  est.edges = edges_;
  est.counts = counts_;
  est.n_hat = n_hat_;
  est.window = window_;
  est.normalized.resize(counts_.size(), 0.0);
  if (n_hat_ > 0.0) {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      est.normalized[i] = static_cast<double>(counts_[i]) / n_hat_;
    }
  }
  return est;
}

PairCorrelationEstimate pair_correlation(const EmpiricalSample& sample,
                                         const std::vector<double>& edges, double window) {
  if (sample.values.empty()) throw InsufficientDataError("pair_correlation: empty sample");
  double w = window;
  if (w <= 0.0) {
    const auto [mn, mx] = std::minmax_element(sample.values.begin(), sample.values.end());
    w = 0.25 * (*mx - *mn);
  }
  PairCorrelationAccumulator acc(edges, w);
  acc.add(sample.values);
  return acc.estimate();
}

EmpiricalSample spacing_histogram(const EmpiricalSample& sample) {
  if (sample.values.size() < 2) throw InsufficientDataError("spacing_histogram: need >= 2 points");
  for (std::size_t i = 1; i < sample.values.size(); ++i) {
    if (sample.values[i] < sample.values[i - 1]) {
      throw RangeError("spacing_histogram: input must be sorted ascending");
    }
  }
  EmpiricalSample out;
  out.model = sample.model + ":spacings";
  out.params = sample.params;
  out.seed = sample.seed;
  out.values.resize(sample.values.size() - 1);
  for (std::size_t i = 1; i < sample.values.size(); ++i) {
    out.values[i - 1] = sample.values[i] - sample.values[i - 1];
  }
  return out;
}

std::vector<double> number_variance_estimate(const std::vector<std::vector<double>>& realizations,
                                             const std::vector<double>& s_values,
                                             int placements_per_realization) {
  if (realizations.empty()) throw InsufficientDataError("number_variance_estimate: no data");
  std::vector<double> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    if (!(s > 0.0)) throw RangeError("number_variance_estimate: s must be positive");
    double sum = 0.0, sumsq = 0.0;
    long total = 0;
    for (const auto& r : realizations) {
      if (r.size() < 2) continue;
      std::vector<double> v = r;
      std::sort(v.begin(), v.end());
      const double lo = v.front(), hi = v.back();
      if (hi - lo <= s) continue;
      for (int k = 0; k < placements_per_realization; ++k) {
        const double start =
            lo + (hi - lo - s) * static_cast<double>(k) / (placements_per_realization - 1);
        const auto first = std::lower_bound(v.begin(), v.end(), start);
        const auto last = std::lower_bound(v.begin(), v.end(), start + s);
        const double c = static_cast<double>(last - first);
        sum += c;
        sumsq += c * c;
        ++total;
      }
    }
    if (total == 0) throw InsufficientDataError("number_variance_estimate: windows did not fit");
    const double mean = sum / total;
    out.push_back(std::max(0.0, sumsq / total - mean * mean));
  }
  return out;
}

StandardizeResult standardize(const EmpiricalSample& sample) {
  if (sample.values.size() < 2) throw InsufficientDataError("standardize: need >= 2 observations");
  StandardizeResult res;
  res.mean = sample_mean(sample.values);
  res.sd = sample_sd(sample.values);
  if (res.sd == 0.0) throw RangeError("standardize: sample is constant");
  res.sample.model = sample.model + ":standardized";
  res.sample.params = sample.params;
  res.sample.seed = sample.seed;
  res.sample.values.resize(sample.values.size());
  for (std::size_t i = 0; i < sample.values.size(); ++i) {
    res.sample.values[i] = (sample.values[i] - res.mean) / res.sd;
  }
  return res;
}

}  // namespace rmt
