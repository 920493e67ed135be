#include "rmt/involution.hpp"

#include <gmpxx.h>

#include <numeric>

#include "rmt/errors.hpp"

namespace rmt {

struct InvolutionSampler::Impl {
  std::vector<mpz_class> counts;        // I(0..n)
  std::vector<std::uint64_t> thresh64;  // floor(2^64 I(m-1)/I(m)), index m
};

InvolutionSampler::InvolutionSampler(int n) : n_(n), impl_(std::make_unique<Impl>()) {
  if (n < 1) throw RangeError("InvolutionSampler: n must be >= 1");
  auto& c = impl_->counts;
  c.resize(n + 1);
  c[0] = 1;
  if (n >= 1) c[1] = 1;
  for (int m = 2; m <= n; ++m) c[m] = c[m - 1] + mpz_class(m - 1) * c[m - 2];

  impl_->thresh64.assign(n + 1, 0);
  static_assert(sizeof(unsigned long) == 8, "get_ui() must expose 64 bits");
  mpz_class tmp;
  for (int m = 2; m <= n; ++m) {
    tmp = c[m - 1] << 64;
    tmp /= c[m];  // < 2^64 since I(m-1) < I(m)
    impl_->thresh64[m] = tmp.get_ui();
  }
}

InvolutionSampler::~InvolutionSampler() = default;
InvolutionSampler::InvolutionSampler(InvolutionSampler&&) noexcept = default;
InvolutionSampler& InvolutionSampler::operator=(InvolutionSampler&&) noexcept = default;

namespace {

// Exact Bernoulli tie-break: decides "< frac" where frac is the fractional
// remainder (I(m-1) 2^64 mod I(m)) / I(m), consuming further 64-bit blocks.
bool tie_break(const mpz_class& num0, const mpz_class& den, StreamRng& rng) {
  mpz_class num = num0;
  for (int round = 0; round < 64; ++round) {
    num <<= 64;
    mpz_class q = num / den;  // < 2^64 since num < den before the shift
    const std::uint64_t qd = q.get_ui();
    const std::uint64_t r = rng.next_u64();
    if (r < qd) return true;
    if (r > qd) return false;
    num -= q * den;
  }
  return false;  // 2^-4096 event; round toward "pair"
}

}  // namespace

Permutation InvolutionSampler::sample(StreamRng& rng) const {
  std::vector<int> pi(n_);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<int> alive(n_);
  std::iota(alive.begin(), alive.end(), 0);

  while (alive.size() > 1) {
    const int m = static_cast<int>(alive.size());
    const int e = alive.back();
    alive.pop_back();
    const std::uint64_t t = impl_->thresh64[m];
    const std::uint64_t r = rng.next_u64();
    bool fixed;
    if (r < t) {
      fixed = true;
    } else if (r > t) {
      fixed = false;
    } else {
      const mpz_class& den = impl_->counts[m];
      mpz_class num = impl_->counts[m - 1] << 64;
      num -= mpz_class(mpz_class(t) * den);
      fixed = tie_break(num, den, rng);
    }
    if (fixed) {
      pi[e] = e;
    } else {
      const std::size_t j = static_cast<std::size_t>(rng.below(alive.size()));
      const int partner = alive[j];
      pi[e] = partner;
      pi[partner] = e;
      alive[j] = alive.back();
      alive.pop_back();
    }
  }
  return Permutation(std::move(pi));
}

std::vector<std::uint64_t> InvolutionSampler::counts(int n_max) {
  if (n_max < 0 || n_max > 32) throw RangeError("InvolutionSampler::counts: n_max must be <= 32");
  std::vector<std::uint64_t> c(n_max + 1, 1);
  for (int m = 2; m <= n_max; ++m) {
    c[m] = c[m - 1] + static_cast<std::uint64_t>(m - 1) * c[m - 2];
  }
  return c;
}

}  // namespace rmt
