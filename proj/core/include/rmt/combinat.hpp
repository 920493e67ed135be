#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

// Bijection on {0, ..., n-1}.  Values are validated on construction.
class Permutation {
 public:
  explicit Permutation(std::vector<int> zero_based);
  static Permutation identity(int n);
  static Permutation reversed(int n);
  static Permutation from_one_based(const std::vector<int>& v);
  static Permutation random(int n, StreamRng& rng);  // Fisher-Yates

  int size() const { return static_cast<int>(v_.size()); }
  int operator[](int i) const { return v_[i]; }
  const std::vector<int>& values() const { return v_; }
  bool is_involution() const;

 private:
  std::vector<int> v_;
};

struct Partition {
  std::vector<int> rows;  // nonincreasing, positive
  int size() const;
  int row(int i) const { return i < static_cast<int>(rows.size()) ? rows[i] : 0; }
};

// Number of piles in greedy patience sorting (strictly-smaller-on-top rule,
// new pile on the right), O(N log N) by binary search over pile tops.
int patience_piles(const Permutation& p);

// Length of the longest strictly increasing subsequence by quadratic dynamic
// programming -- deliberately a different algorithm from patience_piles so
// the two can cross-check each other.
int lis_length(const Permutation& p);

// Exhaustive LIS over all subsequences; n <= 20.  Test oracle.
int lis_length_brute(const std::vector<int>& seq);

// Shape of the RSK insertion tableau.
Partition rsk_shape(const Permutation& p);

// First two rows of the RSK shape without maintaining the deeper rows
// (bumps out of row 2 are discarded; they cannot affect rows 1-2).
std::pair<int, int> rsk_first_two_rows(const Permutation& p);

// Row index (0-based) in which each insertion step ends, i.e. the row of
// the cell created at step t.  Determines the recording tableau, which for
// involutions equals the insertion tableau.
std::vector<int> rsk_insertion_rows(const Permutation& p);

// Time units to board under the one-seat-per-row blocking protocol.  Also
// computes the shadow-line count of the permutation graph and throws
// LogicError if the two disagree.
int boarding_time(const Permutation& p);

// Number of shadow lines of the graph {(i, p(i))}.
int shadow_line_count(const Permutation& p);

}  // namespace rmt
