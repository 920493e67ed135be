#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmt/distribution.hpp"
#include "rmt/rng.hpp"
#include "rmt/stats_types.hpp"

namespace rmt {

// Word over the alphabet {0, ..., alphabet_size-1}.
struct Word {
  std::vector<std::uint8_t> letters;
  int alphabet_size = 2;
};

Word random_word(int length, int alphabet_size, StreamRng& rng);

// Longest weakly increasing subsequence (ties allowed): the patience pile
// count with the strictly-greater replacement rule.
int weak_lis_length(const Word& w);

// Exhaustive search over all subsequences; length <= 20.  Test oracle.
int weak_lis_length_brute(const Word& w);

// Centered statistic (l - N/k) / sqrt(2N/k) used throughout.
double word_statistic(int weak_lis, int length, int alphabet_size);

// Limit CDF of the statistic: the largest-eigenvalue law of a k x k GUE
// matrix conditioned to have trace zero, evaluated by nested quadrature
// over the constrained simplex.  k in {2, 3, 4}.
DistributionTable word_limit_cdf(int k, double s_max = 4.0, double step = 0.01);

// Same value by plain Monte Carlo integration with Gaussian proposals;
// independent of the quadrature path.  Used as a cross-oracle.
double word_limit_cdf_mc(int k, double s, std::size_t samples, StreamRng& rng);

// Exact law of the statistic over all k^length words: (value, probability)
// pairs with ascending values.  k^length <= 2^22.
std::vector<std::pair<double, double>> exact_word_statistic_law(int k, int length);

// Splits a digit stream into consecutive words of word_len and returns the
// statistic per word.  Digits must lie in [0, base); offending offsets are
// reported.  The final partial word is dropped.
EmpiricalSample digit_words_experiment(const std::vector<std::uint8_t>& digits, int base,
                                       int word_len);

}  // namespace rmt
