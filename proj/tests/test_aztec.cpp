#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "rmt/aztec.hpp"
#include "rmt/errors.hpp"
#include "rmt/rng.hpp"
#include "rmt/stats.hpp"

TEST_SUITE("aztec") {
  TEST_CASE("brute-force counts: 2^(n(n+1)/2)") {
    CHECK(rmt::count_tilings_brute(1) == 2);
    CHECK(rmt::count_tilings_brute(2) == 8);
    CHECK(rmt::count_tilings_brute(3) == 64);
    CHECK(rmt::count_tilings_brute(4) == 1024);
  }

  TEST_CASE("order-1 tilings are a fair coin") {
    rmt::StreamRng rng(41, 0);
    int horizontal = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
      const rmt::AztecTiling t = rmt::sample_aztec(1, rng);
      CHECK(t.dominos.size() == 2);
      if (t.dominos[0].horizontal) ++horizontal;
    }
    const double freq = static_cast<double>(horizontal) / draws;
    CHECK(std::fabs(freq - 0.5) <= 0.01);
  }

  TEST_CASE("every sampled tiling validates, with stage audits on") {
    rmt::StreamRng rng(42, 0);
    for (int n = 1; n <= 24; ++n) {
      const rmt::AztecTiling t = rmt::sample_aztec(n, rng, /*audit=*/true);
      CHECK(t.dominos.size() == static_cast<std::size_t>(n) * (n + 1));
      CHECK_NOTHROW(rmt::validate_tiling(t));
    }
  }

  TEST_CASE("sampler reaches all 8 order-2 tilings roughly uniformly") {
    std::map<std::string, int> freq;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) {
      rmt::StreamRng rng(43, i);
      freq[rmt::tiling_key(rmt::sample_aztec(2, rng))]++;
    }
    CHECK(freq.size() == 8);
    const double expected = draws / 8.0;
    double chi2 = 0.0;
    for (const auto& [key, c] : freq) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 <= 24.321886);  // chi^2_7 at the 1e-3 tail
  }

  TEST_CASE("domino types recovered by parity match the tracked directions") {
    // The audit inside sample_aztec compares the parity formula against the
    // types the shuffle actually tracked; run it across parities of n.
    rmt::StreamRng rng(44, 0);
    CHECK_NOTHROW(rmt::sample_aztec(9, rng, /*audit=*/true));
    CHECK_NOTHROW(rmt::sample_aztec(10, rng, /*audit=*/true));
  }

  TEST_CASE("frozen corners: the extreme rows are horizontal brick") {
    rmt::StreamRng rng(45, 0);
    const int n = 48;
    const rmt::AztecTiling t = rmt::sample_aztec(n, rng);
    // The topmost row of a large diamond is covered by north-type
    // horizontal dominoes with overwhelming probability.
    int top_horizontal = 0, top_total = 0;
    for (const rmt::Domino& d : t.dominos) {
      if (d.y == n - 1) {
        ++top_total;
        if (d.horizontal && rmt::domino_type(n, d) == rmt::DominoType::North) ++top_horizontal;
      }
    }
    CHECK(top_total >= 1);
    CHECK(top_horizontal == top_total);
  }

  TEST_CASE("arctic boundary offsets concentrate near zero") {
    const int n = 64;
    std::vector<double> offsets;
    for (int i = 0; i < 200; ++i) {
      rmt::StreamRng rng(46, i);
      offsets.push_back(rmt::arctic_boundary_offset(rmt::sample_aztec(n, rng), 0.5));
    }
    const double mean = rmt::sample_mean(offsets);
    CHECK(std::fabs(mean) <= 0.1);
    CHECK(rmt::sample_sd(offsets) <= 0.2);
  }

  TEST_CASE("alpha symmetry of the boundary statistic") {
    std::vector<double> plus, minus;
    for (int i = 0; i < 300; ++i) {
      rmt::StreamRng rng(47, i);
      const rmt::AztecTiling t = rmt::sample_aztec(32, rng);
      plus.push_back(rmt::arctic_boundary_offset(t, 0.4));
      minus.push_back(rmt::arctic_boundary_offset(t, -0.4));
    }
    // Same-tiling statistics at alpha and -alpha should agree in law;
    // compare means and sds loosely.
    CHECK(std::fabs(rmt::sample_mean(plus) - rmt::sample_mean(minus)) <= 0.05);
    CHECK(std::fabs(rmt::sample_sd(plus) - rmt::sample_sd(minus)) <= 0.05);
  }

  TEST_CASE("parameter validation") {
    rmt::StreamRng rng(48, 0);
    CHECK_THROWS_AS(rmt::sample_aztec(0, rng), rmt::RangeError);
    const rmt::AztecTiling t = rmt::sample_aztec(4, rng);
    CHECK_THROWS_AS(rmt::arctic_boundary_offset(t, 0.5), rmt::SizeError);
    const rmt::AztecTiling big = rmt::sample_aztec(10, rng);
    CHECK_THROWS_AS(rmt::arctic_boundary_offset(big, 0.0), rmt::RangeError);
    CHECK_THROWS_AS(rmt::arctic_boundary_offset(big, 1.5), rmt::RangeError);
  }

  TEST_CASE("validate_tiling catches corruption") {
    rmt::StreamRng rng(49, 0);
    rmt::AztecTiling t = rmt::sample_aztec(3, rng);
    rmt::AztecTiling overlap = t;
    overlap.dominos[0] = overlap.dominos[1];
    CHECK_THROWS_AS(rmt::validate_tiling(overlap), rmt::LogicError);
    rmt::AztecTiling missing = t;
    missing.dominos.pop_back();
    CHECK_THROWS_AS(rmt::validate_tiling(missing), rmt::LogicError);
  }
}
