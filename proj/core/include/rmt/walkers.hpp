#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rmt/combinat.hpp"
#include "rmt/involution.hpp"
#include "rmt/rng.hpp"

namespace rmt {

enum class WalkerVariant { OneSided, Returning };

// Random-turns vicious walkers: walkers start at 0, 1, 2, ...; one walker
// steps left per tick; no site is shared.  Sampling goes through the
// tableau correspondences (walks of duration n <-> standard Young tableaux
// of size n for the one-sided model; left/right returning walks <-> tableau
// pairs, i.e. Plancherel shapes).  The statistic is the distance traveled
// by the walker starting at 0 = the first-row length.
class WalkerSampler {
 public:
  WalkerSampler(WalkerVariant variant, int n);

  WalkerVariant variant() const { return variant_; }
  int n() const { return n_; }
  int sample_distance(StreamRng& rng) const;

 private:
  WalkerVariant variant_;
  int n_;
  std::unique_ptr<InvolutionSampler> involutions_;  // one-sided only
};

// Brute-force enumeration of legal walks under the rules (one left step per
// tick, no collisions).  Feasible for n <= 8.
std::uint64_t count_walks_one_sided(int n);

// Number of returning walks: one-sided walks paired by final configuration.
std::uint64_t count_walks_returning(int n);

// Replays a walk from the per-tick walker indices (the rows in which each
// RSK insertion step ended), validating every move.  Returns the distance
// traveled by walker 0.  Throws LogicError on an illegal move.
int replay_walk(const std::vector<int>& mover_per_tick);

}  // namespace rmt
