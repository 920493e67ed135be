#include "rmt/airy.hpp"

#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {
namespace {

// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3).
constexpr long double kAi0 = 0.3550280538878172392600974L;
constexpr long double kAip0 = -0.2588194037928067984051836L;
constexpr long double kHalfInvSqrtPi = 0.2820947917738781434740397L;  // 1/(2 sqrt(pi))
constexpr long double kInvSqrtPi = 0.5641895835477562869080795L;
constexpr long double kPiL = 3.1415926535897932384626434L;

// Power series about 0.  Ai = sum a_n x^n with a_{n+3} = a_n/((n+3)(n+2)),
// a_0 = Ai(0), a_1 = Ai'(0), a_2 = 0.  Long double accumulation keeps the
// cancellation for |x| near 7 below 1e-12 absolute.
AiryValue airy_series(double xd) {
  if (xd == 0.0) return {0.0, static_cast<double>(kAi0), static_cast<double>(kAip0)};
  const long double x = xd;
  long double c0 = kAi0, c1 = kAip0;  // coefficients a_{3k}, a_{3k+1}; a_{3k+2} = 0
  long double ai = 0.0L, aip = 0.0L, mag = 0.0L;
  long double xp = 1.0L;  // x^{3k}
  const long double x3 = x * x * x;
  for (int k = 0; k < 200; ++k) {
    const int n0 = 3 * k;
    const long double t0 = c0 * xp;       // a_{3k} x^{3k}
    const long double t1 = c1 * xp * x;   // a_{3k+1} x^{3k+1}
    ai += t0 + t1;
    if (k > 0) aip += (long double)n0 * t0 / x;
    aip += (long double)(n0 + 1) * c1 * xp;
    const long double roundmax = fmaxl(fabsl(t0), fabsl(t1));
    mag += roundmax;
    if (k > 2 && roundmax < 1e-26L * (mag + 1e-30L)) break;
    c0 /= (long double)((n0 + 3) * (n0 + 2));
    c1 /= (long double)((n0 + 4) * (n0 + 3));
    xp *= x3;
  }
  return {xd, static_cast<double>(ai), static_cast<double>(aip)};
}

// Asymptotic expansion for x >> 0 (DLMF 9.7.5/9.7.6 coefficients).
AiryValue airy_asymptotic_pos(double xd) {
  const long double x = xd;
  const long double zeta = (2.0L / 3.0L) * x * sqrtl(x);
  long double su = 0.0L, sv = 0.0L;
  long double u = 1.0L, invz = 1.0L / zeta, t = 1.0L;
  long double prev = 1e300L;
  for (int k = 0; k < 80; ++k) {
    const long double term = u * t;
    if (fabsl(term) >= prev) break;  // past optimal truncation
    const long double sign = (k & 1) ? -1.0L : 1.0L;
    const long double v = u * (long double)(6 * k + 1) / (long double)(1 - 6 * k);
    su += sign * term;
    sv += sign * v * t;
    prev = fabsl(term);
    if (prev < 1e-22L) break;
    u *= (long double)((6 * k + 1) * (6 * k + 5)) / (72.0L * (k + 1));
    t *= invz;
  }
  const long double q = powl(x, 0.25L);
  const long double e = expl(-zeta);
  const long double ai = kHalfInvSqrtPi * e / q * su;
  const long double aip = -kHalfInvSqrtPi * e * q * sv;
  return {xd, static_cast<double>(ai), static_cast<double>(aip)};
}

// Oscillatory expansion for x << 0 (DLMF 9.7.9/9.7.10).
AiryValue airy_asymptotic_neg(double xd) {
  const long double z = -static_cast<long double>(xd);
  const long double zeta = (2.0L / 3.0L) * z * sqrtl(z);
  const long double theta = zeta - 0.25L * kPiL;
  long double sums[4] = {0.0L, 0.0L, 0.0L, 0.0L};  // P, Q (Ai), R, S (Ai')
  long double u = 1.0L, invz = 1.0L / zeta, t = 1.0L;
  long double prev = 1e300L;
  for (int k = 0; k < 120; ++k) {
    const long double term = u * t;
    if (fabsl(term) >= prev) break;
    const long double sign = ((k / 2) & 1) ? -1.0L : 1.0L;
    const long double v = u * (long double)(6 * k + 1) / (long double)(1 - 6 * k);
    if ((k & 1) == 0) {
      sums[0] += sign * term;
      sums[2] += sign * v * t;
    } else {
      sums[1] += sign * term;
      sums[3] += sign * v * t;
    }
    prev = fabsl(term);
    if (prev < 1e-22L) break;
    u *= (long double)((6 * k + 1) * (6 * k + 5)) / (72.0L * (k + 1));
    t *= invz;
  }
  const long double q = powl(z, 0.25L);
  const long double c = cosl(theta), s = sinl(theta);
  const long double ai = kInvSqrtPi / q * (c * sums[0] + s * sums[1]);
  const long double aip = kInvSqrtPi * q * (s * sums[2] - c * sums[3]);
  return {xd, static_cast<double>(ai), static_cast<double>(aip)};
}

}  // namespace

AiryValue airy_unchecked(double x) {
  if (x > 640.0) return {x, 0.0, 0.0};
  if (x > 7.0) return airy_asymptotic_pos(x);
  if (x < -7.0) return airy_asymptotic_neg(x);
  return airy_series(x);
}

AiryValue airy(double x) {
  if (!(x >= -20.0 && x <= 12.0)) {
    throw RangeError("airy: argument outside certified range [-20, 12]");
  }
  return airy_unchecked(x);
}

}  // namespace rmt
