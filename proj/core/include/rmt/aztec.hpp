#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

// Cell (x, y) is the unit square with center (x + 1/2, y + 1/2); it belongs
// to the order-n diamond iff |2x+1| + |2y+1| <= 2n.
struct Domino {
  int x;  // left (horizontal) or bottom (vertical) cell
  int y;
  bool horizontal;

  friend bool operator==(const Domino&, const Domino&) = default;
};

struct AztecTiling {
  int n = 0;
  std::vector<Domino> dominos;
};

bool cell_in_diamond(int n, int x, int y);

// Exact uniform sample by domino shuffling: grow order by order, destroying
// facing pairs, sliding, and filling the exposed 2x2 blocks with coin flips.
// With audit=true every second stage re-validates the partial tiling.
AztecTiling sample_aztec(int n, StreamRng& rng, bool audit = false);

// Full cover / no overlap / in bounds.  Throws LogicError on violation.
void validate_tiling(const AztecTiling& t);

// Canonical serialization (sorted domino list) for uniformity counting.
std::string tiling_key(const AztecTiling& t);

// Number of tilings by exhaustive search; n <= 4.
std::uint64_t count_tilings_brute(int n);

enum class DominoType : std::uint8_t { North, South, East, West };

// Shuffling direction class of a domino within an order-n tiling; a parity
// function of its position and orientation.
DominoType domino_type(int n, const Domino& d);

// Signed offset, in diamond-rescaled units of the coordinate u - v, between
// the inner end of the boundary-connected East frozen region along the line
// u + v = alpha and the tangency point of the inscribed circle
// u^2 + v^2 = 1/2.  Preconditions: 0 < |alpha| < 1, n >= 8.
double arctic_boundary_offset(const AztecTiling& t, double alpha);

}  // namespace rmt
