#include <doctest.h>

#include <cmath>
#include <vector>

#include "rmt/rng.hpp"

TEST_SUITE("rng") {
  TEST_CASE("same (seed, stream) reproduces the sequence") {
    rmt::StreamRng a(42, 7), b(42, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  }

  TEST_CASE("distinct streams decorrelate") {
    rmt::StreamRng a(42, 0), b(42, 1);
    int equal = 0;
    for (int i = 0; i < 1000; ++i) {
      if (a.next_u64() == b.next_u64()) ++equal;
    }
    CHECK(equal == 0);
  }

  TEST_CASE("uniform moments") {
    rmt::StreamRng rng(1, 0);
    double sum = 0.0, sumsq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double u = rng.uniform01();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
      sum += u;
      sumsq += u * u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 0.005);
    CHECK(std::fabs(sumsq / n - 1.0 / 3.0) < 0.005);
  }

  TEST_CASE("normal moments") {
    rmt::StreamRng rng(2, 0);
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double x = rng.normal();
      m1 += x;
      m2 += x * x;
      m4 += x * x * x * x;
    }
    CHECK(std::fabs(m1 / n) < 0.01);
    CHECK(std::fabs(m2 / n - 1.0) < 0.02);
    CHECK(std::fabs(m4 / n - 3.0) < 0.1);
  }

  TEST_CASE("bounded draws are unbiased across the range") {
    rmt::StreamRng rng(3, 0);
    std::vector<int> counts(7, 0);
    const int n = 140000;
    for (int i = 0; i < n; ++i) ++counts[rng.below(7)];
    for (int c : counts) {
      CHECK(c > n / 7 - 900);
      CHECK(c < n / 7 + 900);
    }
  }
}
