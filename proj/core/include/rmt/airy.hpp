#pragma once

namespace rmt {

struct AiryValue {
  double x;
  double ai;
  double ai_prime;
};

// Ai(x) and Ai'(x), absolute error <= 1e-10 on the certified range
// [-20, 12].  Maclaurin series (long double accumulation) for |x| <= 7,
// asymptotic expansions beyond.  Throws RangeError outside the range.
AiryValue airy(double x);

// Same evaluation without the range check.  Below -20 and above +12 the
// asymptotic expansions only get more accurate; for large positive x the
// value underflows cleanly to zero.  Used by the kernel code, whose
// quadrature nodes can land far outside the certified window.
AiryValue airy_unchecked(double x);

}  // namespace rmt
