#include "rmt/walkers.hpp"

#include <map>
#include <string>

#include "rmt/errors.hpp"

namespace rmt {

WalkerSampler::WalkerSampler(WalkerVariant variant, int n) : variant_(variant), n_(n) {
  if (n < 1) throw RangeError("WalkerSampler: n must be >= 1");
  if (variant == WalkerVariant::OneSided) {
    involutions_ = std::make_unique<InvolutionSampler>(n);
  }
}

int WalkerSampler::sample_distance(StreamRng& rng) const {
  if (variant_ == WalkerVariant::OneSided) {
    // Uniform SYT of size n = insertion tableau of a uniform involution.
    const Permutation inv = involutions_->sample(rng);
    return rsk_first_two_rows(inv).first;
  }
  // Uniform tableau pair of equal shape = RSK of a uniform permutation.
  const Permutation p = Permutation::random(n_, rng);
  return rsk_first_two_rows(p).first;
}

namespace {

// Recursive enumeration over move counts m_j (walker j has stepped left m_j
// times).  A move of walker j is legal iff j == 0 or m_j < m_{j-1}.
void enumerate_walks(std::vector<int>& moves, int ticks_left, std::uint64_t& total,
                     std::map<std::vector<int>, std::uint64_t>* by_config) {
  if (ticks_left == 0) {
    ++total;
    if (by_config) {
      std::vector<int> key = moves;
      while (!key.empty() && key.back() == 0) key.pop_back();
      ++(*by_config)[key];
    }
    return;
  }
  const int n = static_cast<int>(moves.size());
  for (int j = 0; j < n; ++j) {
    if (j == 0 || moves[j] < moves[j - 1]) {
      ++moves[j];
      enumerate_walks(moves, ticks_left - 1, total, by_config);
      --moves[j];
    }
  }
}

}  // namespace

std::uint64_t count_walks_one_sided(int n) {
  if (n < 0 || n > 8) throw RangeError("count_walks_one_sided: n must be <= 8");
  std::vector<int> moves(n, 0);
  std::uint64_t total = 0;
  enumerate_walks(moves, n, total, nullptr);
  return total;
}

std::uint64_t count_walks_returning(int n) {
  if (n < 0 || n > 8) throw RangeError("count_walks_returning: n must be <= 8");
  std::vector<int> moves(n, 0);
  std::uint64_t total = 0;
  std::map<std::vector<int>, std::uint64_t> by_config;
  enumerate_walks(moves, n, total, &by_config);
  // A returning walk is a left-phase walk glued to a time-reversed one with
  // the same turnaround configuration.
  std::uint64_t pairs = 0;
  for (const auto& [config, count] : by_config) pairs += count * count;
  return pairs;
}

int replay_walk(const std::vector<int>& mover_per_tick) {
  int max_walker = 0;
  for (int j : mover_per_tick) max_walker = std::max(max_walker, j);
  std::vector<int> moves(max_walker + 1, 0);
  for (std::size_t t = 0; t < mover_per_tick.size(); ++t) {
    const int j = mover_per_tick[t];
    if (j < 0) throw LogicError("replay_walk: negative walker index");
    // Walker j sits at j - m_j; the site to its left is free iff walker
    // j-1 has moved strictly more often.
    if (j > 0 && moves[j] >= moves[j - 1]) {
      throw LogicError("replay_walk: collision at tick " + std::to_string(t));
    }
    ++moves[j];
  }
  return moves[0];
}

}  // namespace rmt
