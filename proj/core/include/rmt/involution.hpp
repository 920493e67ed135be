#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rmt/combinat.hpp"
#include "rmt/rng.hpp"

namespace rmt {

// Uniform sampler over involutions of S_n via the recurrence
// I(m) = I(m-1) + (m-1) I(m-2): with probability I(m-1)/I(m) the current
// distinguished label is a fixed point, otherwise it pairs with a uniform
// remaining label.  The I(m) are exact big integers; the Bernoulli decision
// compares 64 uniform bits against a precomputed integer threshold and
// falls back to an exact big-integer comparison on the (probability 2^-64)
// boundary, so the sampled distribution is exactly uniform.
class InvolutionSampler {
 public:
  explicit InvolutionSampler(int n);
  ~InvolutionSampler();
  InvolutionSampler(InvolutionSampler&&) noexcept;
  InvolutionSampler& operator=(InvolutionSampler&&) noexcept;

  int n() const { return n_; }
  Permutation sample(StreamRng& rng) const;

  // I(0..n_max) in plain integers; n_max <= 32 before overflow.
  static std::vector<std::uint64_t> counts(int n_max);

 private:
  struct Impl;
  int n_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rmt
