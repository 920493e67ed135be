#include "rmt/tracy_widom.hpp"

#include <cmath>
#include <cstddef>

#include "rmt/errors.hpp"

namespace rmt {

DistributionTable tracy_widom(int beta, const PainleveSolution& sol, TwGridSpec grid) {
  if (beta != 1 && beta != 2 && beta != 4) throw RangeError("tracy_widom: beta must be 1, 2 or 4");
  if (!(grid.step > 0.0) || grid.t_max <= grid.t_min) {
    throw RangeError("tracy_widom: malformed grid");
  }
  if (!sol.covers(grid.t_min) || !sol.covers(grid.t_max)) {
    throw RangeError("tracy_widom: grid extends beyond the Painleve solution range");
  }

  DistributionTable table;
  table.t_min = grid.t_min;
  table.t_max = grid.t_max;
  table.step = grid.step;
  table.label = beta == 1 ? LawLabel::F1 : beta == 2 ? LawLabel::F2 : LawLabel::F4;
  const std::size_t n = static_cast<std::size_t>(
                            std::llround((grid.t_max - grid.t_min) / grid.step)) + 1;
  table.cdf.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const double t = (i + 1 == n) ? grid.t_max : grid.t_min + grid.step * static_cast<double>(i);
    const double f2 = std::exp(-sol.j_at(t));
    double f;
    if (beta == 2) {
      f = f2;
    } else {
      const double half_i = 0.5 * sol.i_at(t);
      f = std::sqrt(f2) * (beta == 1 ? std::exp(-half_i) : std::cosh(half_i));
    }
    table.cdf[i] = std::min(1.0, std::max(0.0, f));
  }

  // The formulas are monotone in exact arithmetic; guard roundoff at the ends.
  for (std::size_t i = 1; i < n; ++i) {
    if (table.cdf[i] < table.cdf[i - 1]) table.cdf[i] = table.cdf[i - 1];
  }
  return table;
}

DistributionTable tracy_widom(int beta, TwGridSpec grid) {
  return tracy_widom(beta, default_painleve_solution(), grid);
}

}  // namespace rmt
