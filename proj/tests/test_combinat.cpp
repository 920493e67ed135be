#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "rmt/combinat.hpp"
#include "rmt/errors.hpp"
#include "rmt/rng.hpp"

TEST_SUITE("combinat") {
  TEST_CASE("worked example 3 4 1 5 6 2") {
    const rmt::Permutation p = rmt::Permutation::from_one_based({3, 4, 1, 5, 6, 2});
    CHECK(rmt::patience_piles(p) == 4);
    CHECK(rmt::lis_length(p) == 4);
    CHECK(rmt::rsk_shape(p).row(0) == 4);
    CHECK(rmt::boarding_time(p) == 4);
    CHECK(rmt::shadow_line_count(p) == 4);
  }

  TEST_CASE("identity and reversal extremes") {
    for (int n : {1, 3, 8}) {
      const rmt::Permutation id = rmt::Permutation::identity(n);
      const rmt::Permutation rev = rmt::Permutation::reversed(n);
      CHECK(rmt::patience_piles(id) == n);
      CHECK(rmt::patience_piles(rev) == 1);
      CHECK(rmt::lis_length(id) == n);
      CHECK(rmt::lis_length(rev) == 1);
      CHECK(rmt::boarding_time(id) == n);
      CHECK(rmt::boarding_time(rev) == 1);
    }
  }

  TEST_CASE("exhaustive agreement of all five statistics on S7") {
    std::vector<int> v{0, 1, 2, 3, 4, 5, 6};
    long checked = 0;
    do {
      const rmt::Permutation p(v);
      const int piles = rmt::patience_piles(p);
      CHECK(piles == rmt::lis_length(p));
      CHECK(piles == rmt::rsk_shape(p).row(0));
      CHECK(piles == rmt::boarding_time(p));
      CHECK(piles == rmt::shadow_line_count(p));
      ++checked;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(checked == 5040);
  }

  TEST_CASE("lis matches exhaustive subsequence search on random inputs") {
    rmt::StreamRng rng(3, 0);
    for (int trial = 0; trial < 50; ++trial) {
      const rmt::Permutation p = rmt::Permutation::random(10, rng);
      CHECK(rmt::lis_length(p) == rmt::lis_length_brute(p.values()));
    }
  }

  TEST_CASE("RSK shape is a partition of n and matches Plancherel weights on S4") {
    std::vector<int> v{0, 1, 2, 3};
    std::map<std::vector<int>, int> counts;
    do {
      const rmt::Partition shape = rmt::rsk_shape(rmt::Permutation(v));
      CHECK(shape.size() == 4);
      for (std::size_t i = 1; i < shape.rows.size(); ++i) {
        CHECK(shape.rows[i] <= shape.rows[i - 1]);
      }
      counts[shape.rows]++;
    } while (std::next_permutation(v.begin(), v.end()));
    // (dim lambda)^2 over the five shapes of 4: 1, 9, 4, 9, 1.
    CHECK(counts[{4}] == 1);
    CHECK(counts[{3, 1}] == 9);
    CHECK(counts[{2, 2}] == 4);
    CHECK(counts[{2, 1, 1}] == 9);
    CHECK(counts[{1, 1, 1, 1}] == 1);
  }

  TEST_CASE("fast two-row shape agrees with the full insertion") {
    rmt::StreamRng rng(9, 1);
    for (int trial = 0; trial < 40; ++trial) {
      const rmt::Permutation p = rmt::Permutation::random(60, rng);
      const rmt::Partition full = rmt::rsk_shape(p);
      const auto [r1, r2] = rmt::rsk_first_two_rows(p);
      CHECK(r1 == full.row(0));
      CHECK(r2 == full.row(1));
    }
  }

  TEST_CASE("insertion row trace reconstructs the shape") {
    const rmt::Permutation p = rmt::Permutation::from_one_based({3, 4, 1, 5, 6, 2});
    const std::vector<int> rows = rmt::rsk_insertion_rows(p);
    CHECK(rows.size() == 6);
    std::vector<int> shape;
    for (int r : rows) {
      if (r >= static_cast<int>(shape.size())) shape.push_back(0);
      shape[r]++;
    }
    const rmt::Partition expected = rmt::rsk_shape(p);
    CHECK(shape == expected.rows);
  }

  TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(rmt::Permutation({0, 0, 1}), rmt::RangeError);
    CHECK_THROWS_AS(rmt::Permutation({0, 3}), rmt::RangeError);
    CHECK_NOTHROW(rmt::Permutation({2, 0, 1}));
  }

  TEST_CASE("random permutations are uniform on S3") {
    rmt::StreamRng rng(13, 0);
    std::map<std::vector<int>, int> counts;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
      counts[rmt::Permutation::random(3, rng).values()]++;
    }
    CHECK(counts.size() == 6);
    for (const auto& [perm, c] : counts) {
      CHECK(c > draws / 6 - 500);
      CHECK(c < draws / 6 + 500);
    }
  }
}
