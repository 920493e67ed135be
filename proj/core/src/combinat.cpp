#include "rmt/combinat.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rmt/errors.hpp"

namespace rmt {

Permutation::Permutation(std::vector<int> zero_based) : v_(std::move(zero_based)) {
  const int n = static_cast<int>(v_.size());
  std::vector<char> seen(n, 0);
  for (int x : v_) {
    if (x < 0 || x >= n || seen[x]) throw RangeError("Permutation: not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& v) {
  std::vector<int> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] - 1;
  return Permutation(std::move(w));
}

Permutation Permutation::random(int n, StreamRng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(v[i], v[j]);
  }
  return Permutation(std::move(v));
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i) {
    if (v_[v_[i]] != i) return false;
  }
  return true;
}

int Partition::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

int patience_piles(const Permutation& p) {
  std::vector<int> tops;
  tops.reserve(p.size());
  for (int x : p.values()) {
    auto it = std::lower_bound(tops.begin(), tops.end(), x);
    if (it == tops.end()) {
      tops.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tops.size());
}

int lis_length(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return 0;
  std::vector<int> best(n, 1);
  int ans = 1;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (p[j] < p[i] && best[j] + 1 > best[i]) best[i] = best[j] + 1;
    }
    ans = std::max(ans, best[i]);
  }
  return ans;
}

int lis_length_brute(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n > 20) throw RangeError("lis_length_brute: n too large for enumeration");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int prev = std::numeric_limits<int>::min();
    int len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) {
        if (seq[i] <= prev) {
          ok = false;
        } else {
          prev = seq[i];
          ++len;
        }
      }
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

Partition rsk_shape(const Permutation& p) {
  std::vector<std::vector<int>> rows;
  for (int x : p.values()) {
    int cur = x;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == rows.size()) {
        rows.emplace_back();
        rows.back().push_back(cur);
        break;
      }
      auto it = std::lower_bound(rows[r].begin(), rows[r].end(), cur);
      if (it == rows[r].end()) {
        rows[r].push_back(cur);
        break;
      }
      std::swap(cur, *it);
    }
  }
  Partition shape;
  shape.rows.reserve(rows.size());
  for (const auto& row : rows) shape.rows.push_back(static_cast<int>(row.size()));
  return shape;
}

std::pair<int, int> rsk_first_two_rows(const Permutation& p) {
  std::vector<int> row1, row2;
  row1.reserve(p.size());
  for (int x : p.values()) {
    auto it = std::lower_bound(row1.begin(), row1.end(), x);
    if (it == row1.end()) {
      row1.push_back(x);
      continue;
    }
    const int bumped = *it;
    *it = x;
    auto it2 = std::lower_bound(row2.begin(), row2.end(), bumped);
    if (it2 == row2.end()) {
      row2.push_back(bumped);
    } else {
      *it2 = bumped;  // the cascade below row 2 cannot feed back up
    }
  }
  return {static_cast<int>(row1.size()), static_cast<int>(row2.size())};
}

std::vector<int> rsk_insertion_rows(const Permutation& p) {
  std::vector<std::vector<int>> rows;
  std::vector<int> created;
  created.reserve(p.size());
  for (int x : p.values()) {
    int cur = x;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == rows.size()) {
        rows.emplace_back();
      }
      auto it = std::lower_bound(rows[r].begin(), rows[r].end(), cur);
      if (it == rows[r].end()) {
        rows[r].push_back(cur);
        created.push_back(static_cast<int>(r));
        break;
      }
      std::swap(cur, *it);
    }
  }
  return created;
}

int boarding_time(const Permutation& p) {
  // Queue protocol: within one time unit a passenger reaches their row and
  // sits iff every passenger still ahead in the aisle is heading to a row
  // strictly beyond theirs; everyone else stacks up behind the first
  // organizer blocking them.
  std::vector<int> queue = p.values();
  int rounds = 0;
  while (!queue.empty()) {
    ++rounds;
    std::vector<int> blocked;
    blocked.reserve(queue.size());
    int nearest_ahead = std::numeric_limits<int>::max();
    for (int seat : queue) {
      if (seat >= nearest_ahead) blocked.push_back(seat);
      nearest_ahead = std::min(nearest_ahead, seat);
    }
    if (blocked.size() == queue.size()) throw LogicError("boarding_time: no progress");
    queue = std::move(blocked);
  }
  const int shadows = shadow_line_count(p);
  if (shadows != rounds) {
    throw LogicError("boarding_time: shadow-line count " + std::to_string(shadows) +
                     " != boarding rounds " + std::to_string(rounds));
  }
  return rounds;
}

int shadow_line_count(const Permutation& p) {
  // Plot (i, p(i)); a point is on the current shadow line iff no remaining
  // point lies strictly left and below it.  Peel lines until empty.
  std::vector<int> ys = p.values();
  int lines = 0;
  while (!ys.empty()) {
    ++lines;
    std::vector<int> remaining;
    remaining.reserve(ys.size());
    int min_y = std::numeric_limits<int>::max();
    for (int y : ys) {
      if (y > min_y) {
        remaining.push_back(y);  // shadowed by an earlier, lower point
      } else {
        min_y = y;
      }
    }
    ys = std::move(remaining);
  }
  return lines;
}

}  // namespace rmt
