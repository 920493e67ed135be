#include <doctest.h>

#include <cmath>

#include "rmt/airy.hpp"
#include "rmt/errors.hpp"

namespace {

struct AiryRef {
  double x, ai, aip;
};

// mpmath, 40 digits (tests/tools/make_reference_values.py).
constexpr AiryRef kAiryTable[] = {
    {-20.0, -0.1764061270779846895902, 0.8928628567364712383984},
    {-15.0, 0.2782174908708289295276, 0.2723742043086420208258},
    {-10.0, 0.04024123848644319068943, 0.9962650441327900559046},
    {-7.0, 0.1842808352505056372799, -0.7710081684101265477313},
    {-5.0, 0.350761009024114319788, 0.3271928185544431367949},
    {-4.5, 0.2921527810559594668816, -0.5233625323157477007085},
    {-3.0, -0.3788142936776580743472, 0.3145837692165988136508},
    {-2.0, 0.2274074282016855759919, 0.6182590207416910414063},
    {-1.0, 0.5355608832923521187995, -0.01016056711664520939505},
    {-0.5, 0.4757280916105395887986, -0.2040816703395473861448},
    {0.0, 0.3550280538878172392601, -0.2588194037928067984052},
    {0.5, 0.2316936064808334897691, -0.224910532664683893136},
    {1.0, 0.1352924163128814155241, -0.1591474412967932127875},
    {2.0, 0.03492413042327437913532, -0.053090384433653631704},
    {3.0, 0.006591139357460719144257, -0.01191297670595131847376},
    {4.5, 0.0003302503235143089836587, -0.0007178665675575088886936},
    {5.0, 0.0001083444281360744173499, -0.0002474138908684624760002},
    {7.0, 7.492128863997167080771e-7, -2.008150894738791991169e-6},
    {8.0, 4.692207616099231625649e-8, -1.341439297906786574291e-7},
    {10.0, 1.104753255289868593355e-10, -3.520633676738923636621e-10},
    {12.0, 1.393184688875360839049e-13, -4.854736554985308462994e-13},
};

}  // namespace

TEST_SUITE("airy") {
  TEST_CASE("matches high-precision references to 1e-10") {
    for (const AiryRef& ref : kAiryTable) {
      const rmt::AiryValue v = rmt::airy(ref.x);
      CAPTURE(ref.x);
      CHECK(std::fabs(v.ai - ref.ai) <= 1e-10);
      CHECK(std::fabs(v.ai_prime - ref.aip) <= 1e-10);
    }
  }

  TEST_CASE("dense sweep: series and asymptotics satisfy the defining ODE") {
    // (Ai(x+h) - 2 Ai(x) + Ai(x-h))/h^2 ~ x Ai(x).
    const double h = 1e-3;
    for (double x = -19.0; x <= 11.0; x += 0.37) {
      const double a0 = rmt::airy(x - h).ai;
      const double a1 = rmt::airy(x).ai;
      const double a2 = rmt::airy(x + h).ai;
      const double second = (a2 - 2.0 * a1 + a0) / (h * h);
      CAPTURE(x);
      CHECK(std::fabs(second - x * a1) <= 1e-5 * std::max(1.0, std::fabs(x * a1)));
    }
  }

  TEST_CASE("ODE check at the pinned point x=1") {
    const double h = 1e-3;
    const double second =
        (rmt::airy(1.0 + h).ai - 2.0 * rmt::airy(1.0).ai + rmt::airy(1.0 - h).ai) / (h * h);
    CHECK(std::fabs(second - 1.0 * rmt::airy(1.0).ai) <= 1e-5);
  }

  TEST_CASE("positive axis: decay and positivity") {
    CHECK(rmt::airy(8.0).ai > 0.0);
    CHECK(rmt::airy(8.0).ai / rmt::airy(7.0).ai < 1.0);
    double prev = rmt::airy(0.0).ai;
    for (double x = 0.25; x <= 12.0; x += 0.25) {
      const double cur = rmt::airy(x).ai;
      CHECK(cur > 0.0);
      CHECK(cur < prev);
      prev = cur;
    }
  }

  TEST_CASE("switchover continuity near |x| = 7") {
    // Series and asymptotic branches must agree where they meet.
    for (double x : {6.999999, 7.000001, -6.999999, -7.000001}) {
      const rmt::AiryValue a = rmt::airy(x);
      const rmt::AiryValue b = rmt::airy(x < 0 ? -7.0 : 7.0);
      CHECK(std::fabs(a.ai - b.ai) <= 1e-10);
      CHECK(std::fabs(a.ai_prime - b.ai_prime) <= 1e-10);
    }
  }

  TEST_CASE("range errors outside the certified window") {
    CHECK_THROWS_AS(rmt::airy(-20.5), rmt::RangeError);
    CHECK_THROWS_AS(rmt::airy(12.5), rmt::RangeError);
    CHECK_NOTHROW(rmt::airy(-20.0));
    CHECK_NOTHROW(rmt::airy(12.0));
  }

  TEST_CASE("unchecked evaluation keeps working far out") {
    CHECK(rmt::airy_unchecked(50.0).ai > 0.0);
    CHECK(rmt::airy_unchecked(50.0).ai < 1e-50);
    CHECK(rmt::airy_unchecked(700.0).ai == 0.0);
    CHECK(std::fabs(rmt::airy_unchecked(-25.0).ai) < 1.0);
  }
}
