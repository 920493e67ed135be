#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmt {

// Scalar observations plus provenance.
struct EmpiricalSample {
  std::vector<double> values;
  std::string model;   // which sampler produced it
  std::string params;  // free-form parameter description
  std::uint64_t seed = 0;
};

}  // namespace rmt
