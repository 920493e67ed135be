#include "rmt/bus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmt/errors.hpp"

namespace rmt {

std::vector<double> BusRealization::arrival_times(int x) const {
  if (x < 1 || x + n - 1 > route_len) {
    throw RangeError("BusRealization::arrival_times: x must satisfy 1 <= x <= route_len-n+1");
  }
  std::vector<double> t(n);
  for (int j = 0; j < n; ++j) t[j] = jump_times[j][x + j - 1];
  return t;
}

BusRealization sample_bus(int n, double horizon, int route_len, StreamRng& rng) {
  if (n < 1 || n > 6) throw RangeError("sample_bus: n must lie in [1, 6]");
  if (route_len <= n) throw RangeError("sample_bus: route_len must exceed n");
  if (!(horizon > 0.0)) throw RangeError("sample_bus: horizon must be positive");

  BusRealization bus;
  bus.n = n;
  bus.horizon = horizon;
  bus.route_len = route_len;
  bus.jump_times.assign(n, std::vector<double>(route_len));

  constexpr long kBudget = 10'000'000;
  for (long attempt = 0; attempt < kBudget; ++attempt) {
    for (int j = 0; j < n; ++j) {
      auto& t = bus.jump_times[j];
      for (int k = 0; k < route_len; ++k) t[k] = horizon * rng.uniform01();
      std::sort(t.begin(), t.end());
    }
    bool ok = true;
    for (int j = 0; j + 1 < n && ok; ++j) {
      for (int k = 0; k < route_len; ++k) {
        if (bus.jump_times[j + 1][k] <= bus.jump_times[j][k]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return bus;
  }
  throw FeasibilityError("sample_bus: rejection budget exhausted; reduce n or the horizon");
}

std::vector<double> bus_arrivals_rescaled(const BusRealization& bus, int x) {
  std::vector<double> y = bus.arrival_times(x);
  for (double& v : y) v = 2.0 * v / bus.horizon - 1.0;
  return y;
}

BusArrivalMcmc::BusArrivalMcmc(int n, int route_len, int x) : n_(n) {
  if (n < 1) throw RangeError("BusArrivalMcmc: n must be >= 1");
  if (x < 1 || x + n - 1 > route_len) throw RangeError("BusArrivalMcmc: x out of range");
  a_ = static_cast<double>(x - 1);
  b_ = static_cast<double>(route_len - x - n + 1);
  y_.resize(n);
  for (int i = 0; i < n; ++i) {
    y_[i] = -0.6 + 1.2 * (i + 1.0) / (n + 1.0);
  }
}

double BusArrivalMcmc::log_density(const std::vector<double>& y) const {
  double lp = 0.0;
  for (int i = 0; i < n_; ++i) {
    lp += a_ * std::log1p(y[i]) + b_ * std::log1p(-y[i]);
    for (int j = i + 1; j < n_; ++j) lp += 2.0 * std::log(std::fabs(y[i] - y[j]));
  }
  return lp;
}

void BusArrivalMcmc::sweep(StreamRng& rng) {
  for (int i = 0; i < n_; ++i) {
    const double old = y_[i];
    const double prop = old + step_ * rng.normal();
    ++proposals_;
    if (!(prop > -1.0 && prop < 1.0)) continue;
    double delta = a_ * (std::log1p(prop) - std::log1p(old)) +
                   b_ * (std::log1p(-prop) - std::log1p(-old));
    bool degenerate = false;
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      const double dn = std::fabs(prop - y_[j]);
      if (dn == 0.0) {
        degenerate = true;
        break;
      }
      delta += 2.0 * (std::log(dn) - std::log(std::fabs(old - y_[j])));
    }
    if (degenerate) continue;
    if (delta >= 0.0 || rng.uniform01() < std::exp(delta)) {
      y_[i] = prop;
      ++accepts_;
    }
  }
}

void BusArrivalMcmc::burn_in(StreamRng& rng, int sweeps) {
  for (int s = 0; s < sweeps; ++s) sweep(rng);
}

std::vector<double> BusArrivalMcmc::sample(StreamRng& rng, int thin) {
  for (int s = 0; s < thin; ++s) sweep(rng);
  std::vector<double> out = y_;
  std::sort(out.begin(), out.end());
  return out;
}

double BusArrivalMcmc::acceptance_rate() const {
  return proposals_ == 0 ? 0.0 : static_cast<double>(accepts_) / static_cast<double>(proposals_);
}

}  // namespace rmt
