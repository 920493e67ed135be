#pragma once

#include <cstdint>

namespace rmt {

// Splittable counter-based generator.  A (seed, stream) pair fully
// determines the sequence, so Monte Carlo draws are reproducible and
// independent streams can run concurrently: draw i of a run conventionally
// uses StreamRng(seed, i).
//
// The state update is the splitmix64 sequence with the initial state
// derived by hashing seed and stream together.  Gaussian variates use
// Box-Muller rather than std::normal_distribution so that output does not
// depend on the standard library implementation.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  // Standard normal.
  double normal();

  // Uniform on {0, 1, ..., bound-1}; bound >= 1.  Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next_u64() >> 63) != 0; }

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace rmt
