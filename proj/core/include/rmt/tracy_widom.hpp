#pragma once

#include "rmt/distribution.hpp"
#include "rmt/painleve.hpp"

namespace rmt {

struct TwGridSpec {
  double t_min = -10.0;
  double t_max = 5.0;
  double step = 0.005;
};

// Tracy-Widom CDF table for beta in {1, 2, 4}:
//   F2(t) = exp(-J(t))
//   F1(t) = sqrt(F2(t)) exp(-I(t)/2)
//   F4(t) = sqrt(F2(t)) cosh(I(t)/2)
// where I and J are the tail integrals of the Painleve II solution.  The
// grid must be covered by the solution range.
DistributionTable tracy_widom(int beta, const PainleveSolution& sol, TwGridSpec grid = {});

// Convenience overload using the shared default Painleve solution.
DistributionTable tracy_widom(int beta, TwGridSpec grid = {});

}  // namespace rmt
