#pragma once

#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

// Non-intersecting bus paths.  Bus j (j = 0..n-1, bus 0 in front) leaves the
// depot at position -j and makes exactly route_len unit jumps in [0, T]
// (jump times are uniform order statistics, the conditional law of a rate-1
// Poisson path that completes the route by T).  A draw is accepted iff no
// two buses ever share a position, i.e. for every jump index k the k-th
// jump of bus j+1 happens after the k-th jump of bus j.
struct BusRealization {
  int n = 0;
  double horizon = 0.0;
  int route_len = 0;
  std::vector<std::vector<double>> jump_times;  // per bus, ascending

  // Time at which bus j first reaches position x (its (x+j)-th jump).
  // Requires 1 <= x <= route_len - n + 1; ascending in j.
  std::vector<double> arrival_times(int x) const;
};

// Rejection sampler; throws FeasibilityError after 1e7 attempts.
BusRealization sample_bus(int n, double horizon, int route_len, StreamRng& rng);

// Rescaled arrival times y = 2t/T - 1 at observation point x.
std::vector<double> bus_arrivals_rescaled(const BusRealization& bus, int x);

// Metropolis sampler of the explicit arrival-time density
//   prod_j (1+y_j)^{x-1} (1-y_j)^{N-x-n+1} * prod_{i<j} (y_i-y_j)^2
// on (-1,1)^n.  Serves as the independent oracle for the rejection path.
class BusArrivalMcmc {
 public:
  BusArrivalMcmc(int n, int route_len, int x);

  void burn_in(StreamRng& rng, int sweeps);
  // Advances `thin` sweeps and returns the current state, sorted ascending.
  std::vector<double> sample(StreamRng& rng, int thin);

  double acceptance_rate() const;

 private:
  double log_density(const std::vector<double>& y) const;
  void sweep(StreamRng& rng);

  int n_;
  double a_;  // exponent of (1+y)
  double b_;  // exponent of (1-y)
  std::vector<double> y_;
  double step_ = 0.12;
  long proposals_ = 0;
  long accepts_ = 0;
};

}  // namespace rmt
