#include "rmt/aztec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

enum : std::uint8_t { kNorth = 0, kSouth = 1, kEast = 2, kWest = 3 };

struct Dom {
  int x, y;
  std::uint8_t horizontal;
  std::uint8_t type;
};

struct Board {
  int n;                       // frame half-width (final order)
  std::vector<std::int32_t> grid;  // domino index + 1, 0 = empty

  explicit Board(int n_) : n(n_), grid(4 * static_cast<std::size_t>(n_) * n_, 0) {}

  std::int32_t& at(int x, int y) {
    return grid[static_cast<std::size_t>(x + n) + static_cast<std::size_t>(y + n) * (2 * n)];
  }

  void clear_region(int m) {
    for (int y = -m; y < m; ++y) {
      std::fill_n(&at(-m, y), 2 * m, 0);
    }
  }
};

void place(Board& board, const std::vector<Dom>& doms, int m) {
  board.clear_region(m);
  for (std::size_t i = 0; i < doms.size(); ++i) {
    const Dom& d = doms[i];
    const int x2 = d.horizontal ? d.x + 1 : d.x;
    const int y2 = d.horizontal ? d.y : d.y + 1;
    if (!cell_in_diamond(m, d.x, d.y) || !cell_in_diamond(m, x2, y2)) {
      throw LogicError("aztec: slid domino left the diamond");
    }
    std::int32_t& c1 = board.at(d.x, d.y);
    std::int32_t& c2 = board.at(x2, y2);
    if (c1 != 0 || c2 != 0) throw LogicError("aztec: slid dominoes overlap");
    c1 = c2 = static_cast<std::int32_t>(i) + 1;
  }
}

void fill_blocks(Board& board, std::vector<Dom>& doms, int m, StreamRng& rng) {
  for (int y = -m; y < m; ++y) {
    for (int x = -m; x < m; ++x) {
      if (!cell_in_diamond(m, x, y) || board.at(x, y) != 0) continue;
      const bool ok = cell_in_diamond(m, x + 1, y) && cell_in_diamond(m, x, y + 1) &&
                      cell_in_diamond(m, x + 1, y + 1) && board.at(x + 1, y) == 0 &&
                      board.at(x, y + 1) == 0 && board.at(x + 1, y + 1) == 0;
      if (!ok) throw LogicError("aztec: exposed region is not a union of 2x2 blocks");
      if (rng.coin()) {
        doms.push_back({x, y, 1, kSouth});
        doms.push_back({x, y + 1, 1, kNorth});
      } else {
        doms.push_back({x, y, 0, kWest});
        doms.push_back({x + 1, y, 0, kEast});
      }
      const std::int32_t id1 = static_cast<std::int32_t>(doms.size()) - 1;
      board.at(x, y) = id1;
      board.at(x + 1, y) = id1;
      board.at(x, y + 1) = id1;
      board.at(x + 1, y + 1) = id1;
    }
  }
}

void audit_stage(const std::vector<Dom>& doms, int m) {
  AztecTiling t;
  t.n = m;
  t.dominos.reserve(doms.size());
  for (const Dom& d : doms) t.dominos.push_back({d.x, d.y, d.horizontal != 0});
  validate_tiling(t);
  for (const Dom& d : doms) {
    const Domino pub{d.x, d.y, d.horizontal != 0};
    const DominoType formula = domino_type(m, pub);
    const DominoType tracked = static_cast<DominoType>(d.type);
    if (formula != tracked) throw LogicError("aztec: type/parity bookkeeping out of sync");
  }
}

}  // namespace

bool cell_in_diamond(int n, int x, int y) {
  return std::abs(2 * x + 1) + std::abs(2 * y + 1) <= 2 * n;
}

AztecTiling sample_aztec(int n, StreamRng& rng, bool audit) {
  if (n < 1) throw RangeError("sample_aztec: n must be >= 1");
  Board board(n);
  std::vector<Dom> doms;
  doms.reserve(2 * static_cast<std::size_t>(n) * (n + 1));

  for (int m = 1; m <= n; ++m) {
    if (m > 1) {
      // Destruction: facing pairs annihilate before the slide.
      place(board, doms, m - 1);
      std::vector<char> dead(doms.size(), 0);
      for (std::size_t i = 0; i < doms.size(); ++i) {
        const Dom& d = doms[i];
        if (d.type == kNorth) {
          if (cell_in_diamond(m - 1, d.x, d.y + 1)) {
            const std::int32_t other = board.at(d.x, d.y + 1);
            if (other > 0) {
              const Dom& o = doms[other - 1];
              if (o.horizontal && o.type == kSouth && o.x == d.x) {
                dead[i] = dead[other - 1] = 1;
              }
            }
          }
        } else if (d.type == kEast) {
          if (cell_in_diamond(m - 1, d.x + 1, d.y)) {
            const std::int32_t other = board.at(d.x + 1, d.y);
            if (other > 0) {
              const Dom& o = doms[other - 1];
              if (!o.horizontal && o.type == kWest && o.y == d.y) {
                dead[i] = dead[other - 1] = 1;
              }
            }
          }
        }
      }
      // Slide survivors one step along their direction.
      std::vector<Dom> next;
      next.reserve(doms.size() + 4 * m);
      for (std::size_t i = 0; i < doms.size(); ++i) {
        if (dead[i]) continue;
        Dom d = doms[i];
        switch (d.type) {
          case kNorth: d.y += 1; break;
          case kSouth: d.y -= 1; break;
          case kEast: d.x += 1; break;
          case kWest: d.x -= 1; break;
        }
        next.push_back(d);
      }
      doms = std::move(next);
      place(board, doms, m);
    } else {
      board.clear_region(1);
    }
    fill_blocks(board, doms, m, rng);
    if (audit && (m % 2 == 0 || m == n)) audit_stage(doms, m);
  }

  AztecTiling t;
  t.n = n;
  t.dominos.reserve(doms.size());
  for (const Dom& d : doms) t.dominos.push_back({d.x, d.y, d.horizontal != 0});
  return t;
}

void validate_tiling(const AztecTiling& t) {
  const int n = t.n;
  // 2n(n+1) cells, so n(n+1) dominoes.
  if (t.dominos.size() != static_cast<std::size_t>(n) * (n + 1)) {
    throw LogicError("validate_tiling: wrong domino count");
  }
  Board board(n);
  for (std::size_t i = 0; i < t.dominos.size(); ++i) {
    const Domino& d = t.dominos[i];
    const int x2 = d.horizontal ? d.x + 1 : d.x;
    const int y2 = d.horizontal ? d.y : d.y + 1;
    if (!cell_in_diamond(n, d.x, d.y) || !cell_in_diamond(n, x2, y2)) {
      throw LogicError("validate_tiling: domino out of bounds");
    }
    std::int32_t& c1 = board.at(d.x, d.y);
    std::int32_t& c2 = board.at(x2, y2);
    if (c1 != 0 || c2 != 0) throw LogicError("validate_tiling: overlapping dominoes");
    c1 = c2 = static_cast<std::int32_t>(i) + 1;
  }
  for (int y = -n; y < n; ++y) {
    for (int x = -n; x < n; ++x) {
      if (cell_in_diamond(n, x, y) && board.at(x, y) == 0) {
        throw LogicError("validate_tiling: uncovered cell");
      }
    }
  }
}

std::string tiling_key(const AztecTiling& t) {
  std::vector<Domino> sorted = t.dominos;
  std::sort(sorted.begin(), sorted.end(), [](const Domino& a, const Domino& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.horizontal < b.horizontal;
  });
  std::string key;
  key.reserve(sorted.size() * 8);
  for (const Domino& d : sorted) {
    key += std::to_string(d.x);
    key += ',';
    key += std::to_string(d.y);
    key += d.horizontal ? 'h' : 'v';
    key += ';';
  }
  return key;
}

namespace {

std::uint64_t count_rec(Board& board, int n, int start) {
  const int side = 2 * n;
  int idx = start;
  while (idx < side * side) {
    const int x = idx % side - n;
    const int y = idx / side - n;
    if (cell_in_diamond(n, x, y) && board.at(x, y) == 0) break;
    ++idx;
  }
  if (idx == side * side) return 1;
  const int x = idx % side - n;
  const int y = idx / side - n;
  std::uint64_t total = 0;
  if (cell_in_diamond(n, x + 1, y) && board.at(x + 1, y) == 0) {
    board.at(x, y) = board.at(x + 1, y) = 1;
    total += count_rec(board, n, idx + 1);
    board.at(x, y) = board.at(x + 1, y) = 0;
  }
  if (cell_in_diamond(n, x, y + 1) && board.at(x, y + 1) == 0) {
    board.at(x, y) = board.at(x, y + 1) = 1;
    total += count_rec(board, n, idx + 1);
    board.at(x, y) = board.at(x, y + 1) = 0;
  }
  return total;
}

}  // namespace

std::uint64_t count_tilings_brute(int n) {
  if (n < 1 || n > 4) throw RangeError("count_tilings_brute: n must be in [1, 4]");
  Board board(n);
  return count_rec(board, n, 0);
}

DominoType domino_type(int n, const Domino& d) {
  const bool even = (((d.x + d.y + n) % 2) + 2) % 2 == 0;
  if (d.horizontal) return even ? DominoType::North : DominoType::South;
  return even ? DominoType::East : DominoType::West;
}

double arctic_boundary_offset(const AztecTiling& t, double alpha) {
  const int n = t.n;
  if (n < 8) throw SizeError("arctic_boundary_offset: need n >= 8");
  if (!(std::fabs(alpha) < 1.0) || alpha == 0.0) {
    throw RangeError("arctic_boundary_offset: need 0 < |alpha| < 1");
  }
  Board board(n);
  std::vector<std::uint8_t> vertical_east(t.dominos.size() + 1, 0);
  for (std::size_t i = 0; i < t.dominos.size(); ++i) {
    const Domino& d = t.dominos[i];
    const int x2 = d.horizontal ? d.x + 1 : d.x;
    const int y2 = d.horizontal ? d.y : d.y + 1;
    board.at(d.x, d.y) = static_cast<std::int32_t>(i) + 1;
    board.at(x2, y2) = static_cast<std::int32_t>(i) + 1;
    vertical_east[i + 1] =
        !d.horizontal && domino_type(n, d) == DominoType::East ? 1 : 0;
  }

  // Cells along u + v = alpha: centers with x + y = c0 - 1, walked from the
  // east end inward.  tau = x - y must match the parity of c0 - 1.
  long c0 = std::lround(alpha * (n + 1));
  if (c0 >= n - 1) c0 = n - 2;
  if (c0 <= -(n - 1)) c0 = -(n - 2);
  const int parity = static_cast<int>((((c0 - 1) % 2) + 2) % 2);
  int tau = n;
  if ((((tau % 2) + 2) % 2) != parity) --tau;

  int tau_stop = -tau;
  for (; tau >= -n; tau -= 2) {
    const int x = static_cast<int>((c0 - 1 + tau) / 2);
    const int y = static_cast<int>(c0 - 1) - x;
    if (!cell_in_diamond(n, x, y)) continue;
    const std::int32_t id = board.at(x, y);
    if (id <= 0 || !vertical_east[id]) {
      tau_stop = tau;
      break;
    }
  }
  const double boundary = (static_cast<double>(tau_stop) + 1.0) / (n + 1);
  return boundary - std::sqrt(1.0 - alpha * alpha);
}

}  // namespace rmt
