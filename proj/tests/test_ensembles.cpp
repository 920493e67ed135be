#include <doctest.h>

#include <cmath>

#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"
#include "rmt/parallel.hpp"
#include "rmt/rng.hpp"
#include "rmt/stats.hpp"

TEST_SUITE("ensembles") {
  TEST_CASE("GOE entry variances follow exp(-tr M^2)") {
    // For N=2 the spectrum determines trace T = a+c and gap D = lambda2 -
    // lambda1 with D^2 = (a-c)^2 + 4b^2, so the off/diagonal variance ratio
    // is recoverable as (E[D^2]/E[T^2] - 1)/2; it must be 1/2.
    const int draws = 100000;
    double t2 = 0.0, d2 = 0.0;
    for (int i = 0; i < draws; ++i) {
      const rmt::Spectrum sp = rmt::sample_matrix({1, 2}, 5, i);
      const double t = sp.values[0] + sp.values[1];
      const double d = sp.values[1] - sp.values[0];
      t2 += t * t;
      d2 += d * d;
    }
    const double ratio = (d2 / t2 - 1.0) / 2.0;
    CHECK(ratio > 0.47);
    CHECK(ratio < 0.53);
  }

  TEST_CASE("eigenvalue sum equals the trace surrogate: sum of squares matches dimension scaling") {
    // E[tr M^2] = sum of entry variances; empirical check per beta at N=2:
    // beta=1: 3/2, beta=2: 2, beta=4: 3 (trace over the 2N x 2N matrix,
    // i.e. twice the sum over distinct eigenvalues).
    const int draws = 20000;
    for (int beta : {1, 2, 4}) {
      double acc = 0.0;
      for (int i = 0; i < draws; ++i) {
        const rmt::Spectrum sp = rmt::sample_matrix({beta, 2}, 17, i);
        double s = 0.0;
        for (double v : sp.values) s += v * v;
        acc += (beta == 4 ? 2.0 : 1.0) * s;
      }
      const double mean = acc / draws;
      const double expected = beta == 1 ? 1.5 : beta == 2 ? 2.0 : 3.0;
      CAPTURE(beta);
      CHECK(std::fabs(mean - expected) < 0.05 * expected);
    }
  }

  TEST_CASE("beta=4 repulsion quartic: mean squared gap at N=2") {
    // Under exp(-2(x^2+y^2)) |x-y|^4 the mean of (x-y)^2 is 5/2.
    const int draws = 20000;
    double acc = 0.0;
    for (int i = 0; i < draws; ++i) {
      const rmt::Spectrum sp = rmt::sample_matrix({4, 2}, 23, i);
      const double gap = sp.values[1] - sp.values[0];
      acc += gap * gap;
    }
    CHECK(std::fabs(acc / draws - 2.5) < 0.1);
  }

  TEST_CASE("spectra are ascending and reproducible") {
    const rmt::Spectrum a = rmt::sample_matrix({2, 30}, 99, 4);
    const rmt::Spectrum b = rmt::sample_matrix({2, 30}, 99, 4);
    CHECK(a.values == b.values);
    CHECK(a.values.size() == 30);
    for (std::size_t i = 1; i < a.values.size(); ++i) CHECK(a.values[i] >= a.values[i - 1]);
  }

  TEST_CASE("semicircle bulk mass for GUE at N=400") {
    // Fraction of eigenvalues in [-R/2, R/2] tends to 1/3 + sqrt(3)/(2 pi).
    const int n = 400, draws = 200;
    const double radius = rmt::semicircle_radius({2, n});
    std::vector<double> fractions(draws);
    rmt::parallel_for(draws, [&](std::size_t i) {
      const rmt::Spectrum sp = rmt::sample_matrix({2, n}, 31, i);
      int inside = 0;
      for (double v : sp.values) {
        if (std::fabs(v) <= 0.5 * radius) ++inside;
      }
      fractions[i] = static_cast<double>(inside) / n;
    });
    const double mass = rmt::sample_mean(fractions);
    const double expected = 1.0 / 3.0 + std::sqrt(3.0) / (2.0 * M_PI);
    CHECK(std::fabs(mass - expected) < 0.02);
  }

  TEST_CASE("sign-flip symmetry of the spectrum") {
    const int n = 100, draws = 100;
    std::vector<double> pooled, flipped;
    for (int i = 0; i < draws; ++i) {
      const rmt::Spectrum sp = rmt::sample_matrix({2, n}, 41, i);
      for (double v : sp.values) {
        pooled.push_back(v);
        flipped.push_back(-v);
      }
    }
    std::sort(pooled.begin(), pooled.end());
    std::sort(flipped.begin(), flipped.end());
    double ks = 0.0;
    const double m = static_cast<double>(pooled.size());
    std::size_t i = 0, j = 0;
    while (i < pooled.size() && j < flipped.size()) {
      if (pooled[i] <= flipped[j]) ++i; else ++j;
      ks = std::max(ks, std::fabs(static_cast<double>(i) - static_cast<double>(j)) / m);
    }
    CHECK(ks <= 0.03);
  }

  TEST_CASE("unfold_bulk yields unit mean spacing and flat density") {
    const rmt::Spectrum sp = rmt::sample_matrix({2, 400}, 57, 0);
    const rmt::UnfoldedPoints u = rmt::unfold_bulk(sp, 0.25);
    const double mean_spacing =
        (u.values.back() - u.values.front()) / static_cast<double>(u.values.size() - 1);
    CHECK(mean_spacing > 0.9);
    CHECK(mean_spacing < 1.1);

    // Unfolding twice is the identity up to scale: the re-estimated density
    // of the unfolded points should be flat across quarters of the window.
    const std::size_t q = u.values.size() / 4;
    const double d1 = u.values[q] - u.values.front();
    const double d2 = u.values[2 * q] - u.values[q];
    const double d3 = u.values[3 * q] - u.values[2 * q];
    CHECK(std::fabs(d2 / d1 - 1.0) < 0.35);
    CHECK(std::fabs(d3 / d2 - 1.0) < 0.35);
  }

  TEST_CASE("doubling N leaves unfolded spacings statistically unchanged") {
    auto spacings_for = [](int n, int draws, std::uint64_t seed) {
      std::vector<double> out;
      for (int i = 0; i < draws; ++i) {
        const rmt::UnfoldedPoints u =
            rmt::unfold_bulk(rmt::sample_matrix({2, n}, seed, i), 0.25);
        for (std::size_t k = 1; k < u.values.size(); ++k) {
          out.push_back(u.values[k] - u.values[k - 1]);
        }
      }
      return out;
    };
    std::vector<double> a = spacings_for(200, 220, 61);
    std::vector<double> b = spacings_for(400, 110, 62);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double ks = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] <= b[j]) ++i; else ++j;
      ks = std::max(ks, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    CHECK(ks <= 0.05);
  }

  TEST_CASE("edge statistic is affine-equivariant") {
    rmt::Spectrum sp = rmt::sample_matrix({2, 50}, 71, 0);
    const double base = rmt::edge_statistic(sp);
    const double c = 0.37;
    for (double& v : sp.values) v += c;
    const double shifted = rmt::edge_statistic(sp);
    const rmt::EdgeScaling es = rmt::edge_scaling({2, 50});
    CHECK(shifted - base == doctest::Approx(c / es.scale).epsilon(1e-12));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(rmt::sample_matrix({3, 10}, 1, 0), rmt::RangeError);
    CHECK_THROWS_AS(rmt::sample_matrix({2, 1}, 1, 0), rmt::RangeError);
    const rmt::Spectrum sp = rmt::sample_matrix({2, 30}, 1, 0);
    CHECK_THROWS_AS(rmt::unfold_bulk(sp, 0.0), rmt::RangeError);
    CHECK_THROWS_AS(rmt::unfold_bulk(sp, 0.6), rmt::RangeError);
    CHECK_THROWS_AS(rmt::unfold_bulk(sp, 0.25), rmt::InsufficientDataError);  // 7 < 20 points
  }
}
