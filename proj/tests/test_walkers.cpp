#include <doctest.h>

#include <vector>

#include "rmt/combinat.hpp"
#include "rmt/errors.hpp"
#include "rmt/involution.hpp"
#include "rmt/rng.hpp"
#include "rmt/walkers.hpp"

TEST_SUITE("walkers") {
  TEST_CASE("one-sided walk counts equal the involution numbers") {
    const auto inv = rmt::InvolutionSampler::counts(6);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(rmt::count_walks_one_sided(n) == inv[n]);
    }
    // I(1..6) = 1, 2, 4, 10, 26, 76.
    CHECK(rmt::count_walks_one_sided(6) == 76);
  }

  TEST_CASE("returning walk counts equal n!") {
    std::uint64_t factorial = 1;
    for (int n = 1; n <= 6; ++n) {
      factorial *= static_cast<std::uint64_t>(n);
      CAPTURE(n);
      CHECK(rmt::count_walks_returning(n) == factorial);
    }
  }

  TEST_CASE("the worked four-tick walk has distance 2") {
    // Tick-by-tick movers 0, 1, 0, 2 -- walker 0 travels twice.
    CHECK(rmt::replay_walk({0, 1, 0, 2}) == 2);
  }

  TEST_CASE("replay validates collisions") {
    // Walker 1 cannot move before walker 0 has vacated its site.
    CHECK_THROWS_AS(rmt::replay_walk({1}), rmt::LogicError);
    CHECK_THROWS_AS(rmt::replay_walk({0, 1, 1}), rmt::LogicError);
    CHECK_NOTHROW(rmt::replay_walk({0, 0, 1, 0, 1, 2}));
  }

  TEST_CASE("sampled tableaux decode to legal walks with matching distance") {
    const rmt::InvolutionSampler sampler(12);
    rmt::StreamRng rng(31, 0);
    for (int trial = 0; trial < 100; ++trial) {
      const rmt::Permutation inv = sampler.sample(rng);
      const std::vector<int> rows = rmt::rsk_insertion_rows(inv);
      const int replayed = rmt::replay_walk(rows);
      CHECK(replayed == rmt::rsk_shape(inv).row(0));
    }
  }

  TEST_CASE("distance is bounded by the duration") {
    for (auto variant : {rmt::WalkerVariant::OneSided, rmt::WalkerVariant::Returning}) {
      const rmt::WalkerSampler sampler(variant, 24);
      rmt::StreamRng rng(32, 0);
      for (int i = 0; i < 300; ++i) {
        const int d = sampler.sample_distance(rng);
        CHECK(d >= 1);
        CHECK(d <= 24);
      }
    }
  }

  TEST_CASE("returning variant equals the Plancherel first row by construction") {
    const rmt::WalkerSampler sampler(rmt::WalkerVariant::Returning, 64);
    rmt::StreamRng a(33, 5);
    rmt::StreamRng b(33, 5);
    const int d = sampler.sample_distance(a);
    const rmt::Permutation p = rmt::Permutation::random(64, b);
    CHECK(d == rmt::rsk_shape(p).row(0));
  }
}
