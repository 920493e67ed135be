#include <doctest.h>

#include <cmath>

#include "rmt/distribution.hpp"
#include "rmt/errors.hpp"
#include "rmt/kernels.hpp"
#include "rmt/rng.hpp"
#include "rmt/stats.hpp"
#include "rmt/tracy_widom.hpp"

TEST_SUITE("stats") {
  TEST_CASE("KS self-consistency via inverse-CDF sampling") {
    const rmt::DistributionTable f2 = rmt::tracy_widom(2);
    rmt::EmpiricalSample s;
    rmt::StreamRng rng(61, 0);
    for (int i = 0; i < 100000; ++i) {
      double u;
      do {
        u = rng.uniform01();
      } while (u <= 0.0 || u >= 1.0);
      s.values.push_back(rmt::distribution_quantile(f2, u));
    }
    CHECK(rmt::ks_distance(s, f2) <= 0.01);
  }

  TEST_CASE("KS is invariant under joint monotone transforms") {
    const rmt::DistributionTable f2 = rmt::tracy_widom(2);
    rmt::EmpiricalSample s;
    rmt::StreamRng rng(62, 0);
    for (int i = 0; i < 5000; ++i) {
      s.values.push_back(rmt::distribution_quantile(f2, 0.001 + 0.998 * rng.uniform01()));
    }
    const double base = rmt::ks_distance(s, f2);
    // x -> 3x + 2 applied to sample and grid alike.
    rmt::EmpiricalSample t = s;
    for (double& v : t.values) v = 3.0 * v + 2.0;
    rmt::DistributionTable g = f2;
    g.t_min = 3.0 * f2.t_min + 2.0;
    g.t_max = 3.0 * f2.t_max + 2.0;
    g.step = 3.0 * f2.step;
    CHECK(rmt::ks_distance(t, g) == doctest::Approx(base).epsilon(1e-12));
  }

  TEST_CASE("KS of disjoint point masses is 1") {
    // A table concentrated near 0 vs a sample far to the right.
    rmt::DistributionTable point;
    point.t_min = -1.0;
    point.t_max = 1.0;
    point.step = 0.5;
    point.cdf = {0.0, 0.0, 1.0, 1.0, 1.0};
    rmt::EmpiricalSample s;
    s.values.assign(100, 0.9);
    CHECK(rmt::ks_distance(s, point) == doctest::Approx(1.0));
  }

  TEST_CASE("KS validates sample size and range") {
    const rmt::DistributionTable f2 = rmt::tracy_widom(2);
    rmt::EmpiricalSample tiny;
    tiny.values.assign(10, 0.0);
    CHECK_THROWS_AS(rmt::ks_distance(tiny, f2), rmt::InsufficientDataError);
    rmt::EmpiricalSample outside;
    outside.values.assign(100, 20.0);
    CHECK_THROWS_AS(rmt::ks_distance(outside, f2), rmt::RangeError);
  }

  TEST_CASE("pair correlation of Poisson points is flat") {
    rmt::StreamRng rng(63, 0);
    std::vector<double> pts(100000);
    for (double& p : pts) p = 100000.0 * rng.uniform01();
    std::sort(pts.begin(), pts.end());
    std::vector<double> edges{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    rmt::PairCorrelationAccumulator acc(edges, 25000.0);
    acc.add(pts);
    const rmt::PairCorrelationEstimate est = acc.estimate();
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
      const double len = edges[b + 1] - edges[b];
      CHECK(std::fabs(est.normalized[b] - len) <= 0.05 * len);
    }
  }

  TEST_CASE("pair correlation bin additivity and shift invariance") {
    rmt::StreamRng rng(64, 0);
    std::vector<double> pts(20000);
    for (double& p : pts) p = 20000.0 * rng.uniform01();
    const auto run = [&](const std::vector<double>& edges, double shift) {
      std::vector<double> shifted = pts;
      for (double& v : shifted) v += shift;
      rmt::PairCorrelationAccumulator acc(edges, 5000.0);
      acc.add(shifted);
      return acc.estimate();
    };
    const auto ab = run({0.0, 1.0}, 0.0);
    const auto bc = run({1.0, 2.0}, 0.0);
    const auto ac = run({0.0, 2.0}, 0.0);
    CHECK(ab.counts[0] + bc.counts[0] == ac.counts[0]);
    const auto shifted = run({0.0, 2.0}, 1234.5);
    CHECK(shifted.counts[0] == ac.counts[0]);
  }

  TEST_CASE("spacing histogram basics") {
    rmt::EmpiricalSample arith;
    for (int i = 0; i < 100; ++i) arith.values.push_back(static_cast<double>(i));
    const rmt::EmpiricalSample sp = rmt::spacing_histogram(arith);
    for (double v : sp.values) CHECK(v == 1.0);
    rmt::EmpiricalSample unsorted;
    unsorted.values = {1.0, 0.5};
    CHECK_THROWS_AS(rmt::spacing_histogram(unsorted), rmt::RangeError);
  }

  TEST_CASE("number variance of Poisson points is ~ s") {
    rmt::StreamRng rng(65, 0);
    std::vector<std::vector<double>> realizations(20);
    for (auto& r : realizations) {
      r.resize(20000);
      for (double& p : r) p = 20000.0 * rng.uniform01();
    }
    const std::vector<double> svals{1.0, 2.0, 5.0, 10.0};
    const std::vector<double> v = rmt::number_variance_estimate(realizations, svals, 400);
    for (std::size_t i = 0; i < svals.size(); ++i) {
      CAPTURE(svals[i]);
      CHECK(std::fabs(v[i] - svals[i]) <= 0.05 * svals[i]);
      CHECK(v[i] >= 0.0);
    }
  }

  TEST_CASE("standardize round-trips and validates") {
    rmt::EmpiricalSample s;
    rmt::StreamRng rng(66, 0);
    for (int i = 0; i < 1000; ++i) s.values.push_back(3.0 + 2.0 * rng.normal());
    const rmt::StandardizeResult r = rmt::standardize(s);
    CHECK(std::fabs(rmt::sample_mean(r.sample.values)) <= 1e-12);
    CHECK(rmt::sample_sd(r.sample.values) == doctest::Approx(1.0).epsilon(1e-12));
    // Inverse map recovers the originals.
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      CHECK(std::fabs(r.sample.values[i] * r.sd + r.mean - s.values[i]) <= 1e-12);
    }
    // Already-standardized data is a fixed point.
    const rmt::StandardizeResult r2 = rmt::standardize(r.sample);
    CHECK(r2.mean == doctest::Approx(0.0));
    CHECK(r2.sd == doctest::Approx(1.0));

    rmt::EmpiricalSample constant;
    constant.values.assign(10, 2.5);
    CHECK_THROWS_AS(rmt::standardize(constant), rmt::RangeError);
    rmt::EmpiricalSample single;
    single.values = {1.0};
    CHECK_THROWS_AS(rmt::standardize(single), rmt::InsufficientDataError);
  }

  TEST_CASE("estimators are deterministic") {
    rmt::StreamRng rng(67, 0);
    rmt::EmpiricalSample s;
    for (int i = 0; i < 5000; ++i) s.values.push_back(rng.normal());
    std::sort(s.values.begin(), s.values.end());
    const rmt::EmpiricalSample sp1 = rmt::spacing_histogram(s);
    const rmt::EmpiricalSample sp2 = rmt::spacing_histogram(s);
    CHECK(sp1.values == sp2.values);
    const std::vector<double> v1 = rmt::number_variance_estimate({s.values}, {1.0, 2.0});
    const std::vector<double> v2 = rmt::number_variance_estimate({s.values}, {1.0, 2.0});
    CHECK(v1 == v2);
  }
}
