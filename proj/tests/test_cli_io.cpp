#include <doctest.h>

#include <cmath>

#include "rmt/distribution.hpp"
#include "rmt/errors.hpp"
#include "rmt/tracy_widom.hpp"
#include "rmt/verify.hpp"

TEST_SUITE("cli_io") {
  TEST_CASE("quick verification tier passes and is fast") {
    rmt::VerifyOptions opts;
    opts.seed = 1;
    const auto results = rmt::run_verify(rmt::VerifyLevel::Quick, opts);
    CHECK(results.size() == 4);
    for (const auto& r : results) {
      CAPTURE(r.id);
      CAPTURE(r.detail);
      CHECK(r.pass);
      CHECK(!r.skipped);
    }
  }

  TEST_CASE("threshold overrides below achievable accuracy fail the criterion") {
    rmt::VerifyOptions opts;
    opts.seed = 1;
    opts.threshold_overrides["1"] = 1e-15;  // tighter than double precision allows
    const auto results = rmt::run_verify(rmt::VerifyLevel::Quick, opts);
    CHECK(results[0].id == "1");
    CHECK_FALSE(results[0].pass);
    CHECK(results[0].threshold == 1e-15);
    // The remaining criteria are untouched.
    CHECK(results[1].pass);
  }

  TEST_CASE("result formatting names the criterion") {
    rmt::CriterionResult r;
    r.id = "3";
    r.name = "demo";
    r.pass = true;
    r.detail = "x=1";
    const std::string line = rmt::format_result(r);
    CHECK(line.find("[PASS]") != std::string::npos);
    CHECK(line.find("demo") != std::string::npos);
    r.skipped = true;
    CHECK(rmt::format_result(r).find("[SKIP]") != std::string::npos);
  }

  TEST_CASE("standardized tables rescale the grid affinely") {
    const rmt::DistributionTable f2 = rmt::tracy_widom(2);
    const double m = rmt::distribution_mean(f2);
    const double sd = std::sqrt(rmt::distribution_variance(f2));
    const rmt::DistributionTable std_f2 = rmt::standardized_table(f2, m, sd);
    CHECK(std::fabs(rmt::distribution_mean(std_f2)) <= 1e-9);
    CHECK(rmt::distribution_variance(std_f2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std_f2.value((f2.t_min - m) / sd) == f2.cdf.front());
  }
}
