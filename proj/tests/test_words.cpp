#include <doctest.h>

#include <cmath>

#include "rmt/errors.hpp"
#include "rmt/rng.hpp"
#include "rmt/stats.hpp"
#include "rmt/words.hpp"

TEST_SUITE("words") {
  TEST_CASE("weak LIS basics") {
    CHECK(rmt::weak_lis_length({{1, 1, 1}, 2}) == 3);
    CHECK(rmt::weak_lis_length({{1, 0, 1, 0}, 2}) == 2);
    CHECK(rmt::weak_lis_length({{0, 1, 0, 1}, 2}) == 3);
  }

  TEST_CASE("weak LIS matches exhaustive subsequence search") {
    rmt::StreamRng rng(4, 0);
    for (int trial = 0; trial < 60; ++trial) {
      const rmt::Word w = rmt::random_word(12, 3, rng);
      CHECK(rmt::weak_lis_length(w) == rmt::weak_lis_length_brute(w));
    }
  }

  TEST_CASE("limit CDF is monotone from ~0 to ~1 and normalized by gamma_k") {
    for (int k : {2, 3}) {
      const rmt::DistributionTable cdf = rmt::word_limit_cdf(k);
      CAPTURE(k);
      CHECK(cdf.cdf.front() <= 1e-8);
      CHECK(cdf.cdf.back() == doctest::Approx(1.0).epsilon(1e-5));
      for (std::size_t i = 1; i < cdf.size(); ++i) CHECK(cdf.cdf[i] >= cdf.cdf[i - 1]);
    }
    // k = 4 on a coarser grid (three nested quadratures per point).
    const rmt::DistributionTable cdf4 = rmt::word_limit_cdf(4, 3.5, 0.05);
    CHECK(cdf4.cdf.back() == doctest::Approx(1.0).epsilon(1e-4));
  }

  TEST_CASE("k=2 closed-form anchors") {
    // gamma_2 int_{-s}^{s} 4x^2 exp(-2x^2) dx at three spots (mpmath).
    const rmt::DistributionTable cdf = rmt::word_limit_cdf(2);
    CHECK(cdf.value(0.5) == doctest::Approx(0.1987480430987992).epsilon(1e-8));
    CHECK(cdf.value(1.0) == doctest::Approx(0.7385358700508894).epsilon(1e-8));
    CHECK(cdf.value(2.0) == doctest::Approx(0.9988660157102147).epsilon(1e-8));
  }

  TEST_CASE("quadrature agrees with Monte Carlo integration") {
    const rmt::DistributionTable cdf2 = rmt::word_limit_cdf(2);
    rmt::StreamRng rng(8, 0);
    for (double s : {0.5, 1.0, 2.0}) {
      const double mc = rmt::word_limit_cdf_mc(2, s, 400000, rng);
      CHECK(std::fabs(mc - cdf2.value(s)) <= 5e-3);
    }
    const rmt::DistributionTable cdf3 = rmt::word_limit_cdf(3);
    const double mc3 = rmt::word_limit_cdf_mc(3, 1.0, 400000, rng);
    CHECK(std::fabs(mc3 - cdf3.value(1.0)) <= 5e-3);
  }

  TEST_CASE("exact k=2 law at N=12 vs Monte Carlo sampling") {
    const auto law = rmt::exact_word_statistic_law(2, 12);
    double total = 0.0;
    for (const auto& [value, prob] : law) total += prob;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    rmt::EmpiricalSample mc;
    rmt::StreamRng rng(12, 0);
    for (int i = 0; i < 100000; ++i) {
      const rmt::Word w = rmt::random_word(12, 2, rng);
      mc.values.push_back(rmt::word_statistic(rmt::weak_lis_length(w), 12, 2));
    }
    CHECK(rmt::tv_distance_discrete(mc, law) <= 0.02);
  }

  TEST_CASE("finite-N exact law sits near the k=2 limit CDF") {
    const auto law = rmt::exact_word_statistic_law(2, 12);
    const rmt::DistributionTable limit = rmt::word_limit_cdf(2);
    // KS between the exact discrete law and the limit: the documented
    // finite-N gap bound.
    double cdf = 0.0, ks = 0.0;
    for (const auto& [value, prob] : law) {
      const double ref = value <= limit.t_max ? limit.value(std::max(0.0, value)) : 1.0;
      ks = std::max(ks, std::fabs(cdf - ref));
      cdf += prob;
      ks = std::max(ks, std::fabs(cdf - ref));
    }
    CHECK(ks <= 0.12);
  }

  TEST_CASE("digit stream slicing and validation") {
    std::vector<std::uint8_t> digits(1000);
    for (std::size_t i = 0; i < digits.size(); ++i) digits[i] = i % 2;
    const rmt::EmpiricalSample s = rmt::digit_words_experiment(digits, 2, 64);
    CHECK(s.values.size() == 15);  // floor(1000/64)

    const std::vector<std::uint8_t> constant(128, 1);
    const rmt::EmpiricalSample c = rmt::digit_words_experiment(constant, 2, 64);
    // Constant stream: every word attains the full length.
    for (double v : c.values) {
      CHECK(v == doctest::Approx(rmt::word_statistic(64, 64, 2)));
    }

    std::vector<std::uint8_t> bad(100, 0);
    bad[17] = 7;
    CHECK_THROWS_AS(rmt::digit_words_experiment(bad, 2, 10), rmt::ParseError);
    CHECK_THROWS_AS(rmt::digit_words_experiment({{1, 0}}, 2, 10),
                    rmt::InsufficientDataError);
  }

  TEST_CASE("seeded RNG stream behaves like a random number generator of digits") {
    // base 2, word length 256, 2000 words vs the k=2 limit law.
    rmt::StreamRng rng(2026, 0);
    std::vector<std::uint8_t> digits(2000 * 256);
    for (auto& d : digits) d = static_cast<std::uint8_t>(rng.below(2));
    rmt::EmpiricalSample s = rmt::digit_words_experiment(digits, 2, 256);
    CHECK(s.values.size() == 2000);
    const double ks = rmt::ks_distance(s, rmt::word_limit_cdf(2));
    CHECK(ks <= 0.08);
  }
}
