#include "rmt/words.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmt/errors.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {
namespace {

double gamma_k(int k) {
  // sqrt(k) 2^{(k^2-1)/k} / (prod_{i<=k} i!  (2 pi)^{(k-1)/2})
  double fact = 1.0, prod = 1.0;
  for (int i = 1; i <= k; ++i) {
    fact *= i;
    prod *= fact;
  }
  return std::sqrt(static_cast<double>(k)) *
         std::pow(2.0, (static_cast<double>(k) * k - 1.0) / k) /
         (prod * std::pow(2.0 * M_PI, 0.5 * (k - 1)));
}

double vandermonde_sq(const double* x, int k) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) v *= x[i] - x[j];
  }
  return v * v;
}

// Integral of exp(-sum x_i^2) * vandermonde^2 over the trace-zero simplex
// {max x_i <= s, sum x_i = 0} in the first k-1 coordinates.
double simplex_integral(int k, double s) {
  if (s <= 0.0) return 0.0;
  const int order = 48;
  if (k == 2) {
    auto f = [](double x1) {
      const double x[2] = {x1, -x1};
      return std::exp(-2.0 * x1 * x1) * vandermonde_sq(x, 2);
    };
    return integrate_panels(f, -s, s, std::max(2, static_cast<int>(s) + 1), order);
  }
  if (k == 3) {
    auto outer = [&](double x1) {
      const double lo = -s - x1;  // x3 = -x1-x2 <= s
      if (lo >= s) return 0.0;
      auto inner = [&](double x2) {
        const double x[3] = {x1, x2, -x1 - x2};
        return std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])) * vandermonde_sq(x, 3);
      };
      return integrate_gl(inner, lo, s, order);
    };
    return integrate_panels(outer, -2.0 * s, s, std::max(3, static_cast<int>(2 * s) + 2), order);
  }
  // k == 4
  auto outer = [&](double x1) {
    auto mid = [&](double x2) {
      const double lo = -s - x1 - x2;
      if (lo >= s) return 0.0;
      auto inner = [&](double x3) {
        const double x[4] = {x1, x2, x3, -x1 - x2 - x3};
        return std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3])) *
               vandermonde_sq(x, 4);
      };
      return integrate_gl(inner, lo, s, 32);
    };
    const double lo2 = -2.0 * s - x1;
    if (lo2 >= s) return 0.0;
    return integrate_gl(mid, lo2, s, 32);
  };
  return integrate_panels(outer, -3.0 * s, s, std::max(4, static_cast<int>(3 * s) + 2), 32);
}

}  // namespace

Word random_word(int length, int alphabet_size, StreamRng& rng) {
  Word w;
  w.alphabet_size = alphabet_size;
  w.letters.resize(length);
  for (int i = 0; i < length; ++i) {
    w.letters[i] = static_cast<std::uint8_t>(rng.below(alphabet_size));
  }
  return w;
}

int weak_lis_length(const Word& w) {
  std::vector<std::uint8_t> tops;
  tops.reserve(w.letters.size());
  for (std::uint8_t x : w.letters) {
    auto it = std::upper_bound(tops.begin(), tops.end(), x);
    if (it == tops.end()) {
      tops.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tops.size());
}

int weak_lis_length_brute(const Word& w) {
  const int n = static_cast<int>(w.letters.size());
  if (n > 20) throw RangeError("weak_lis_length_brute: word too long for enumeration");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int prev = -1;
    int len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) {
        if (w.letters[i] < prev) {
          ok = false;
        } else {
          prev = w.letters[i];
          ++len;
        }
      }
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

double word_statistic(int weak_lis, int length, int alphabet_size) {
  const double n = static_cast<double>(length);
  const double k = static_cast<double>(alphabet_size);
  return (static_cast<double>(weak_lis) - n / k) / std::sqrt(2.0 * n / k);
}

DistributionTable word_limit_cdf(int k, double s_max, double step) {
  if (k < 2 || k > 4) throw RangeError("word_limit_cdf: k must be 2, 3 or 4");
  if (!(s_max > 0.0) || !(step > 0.0)) throw RangeError("word_limit_cdf: malformed grid");
  DistributionTable table;
  table.t_min = 0.0;
  table.t_max = s_max;
  table.step = step;
  table.label = LawLabel::WordLimit;
  const std::size_t n = static_cast<std::size_t>(std::llround(s_max / step)) + 1;
  table.cdf.resize(n);
  const double g = gamma_k(k);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = (i + 1 == n) ? s_max : step * static_cast<double>(i);
    table.cdf[i] = std::min(1.0, std::max(0.0, g * simplex_integral(k, s)));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (table.cdf[i] < table.cdf[i - 1]) table.cdf[i] = table.cdf[i - 1];
  }
  return table;
}

double word_limit_cdf_mc(int k, double s, std::size_t samples, StreamRng& rng) {
  if (k < 2 || k > 4) throw RangeError("word_limit_cdf_mc: k must be 2, 3 or 4");
  // Importance sampling: x_1..x_{k-1} ~ N(0, 1/2) has density
  // exp(-sum x^2) / pi^{(k-1)/2} on the free coordinates.
  const double g = gamma_k(k);
  const double pi_pow = std::pow(M_PI, 0.5 * (k - 1));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double acc = 0.0;
  std::vector<double> x(k);
  for (std::size_t it = 0; it < samples; ++it) {
    double sum = 0.0;
    double maxc = -1e300;
    for (int i = 0; i + 1 < k; ++i) {
      x[i] = inv_sqrt2 * rng.normal();
      sum += x[i];
      maxc = std::max(maxc, x[i]);
    }
    x[k - 1] = -sum;
    maxc = std::max(maxc, x[k - 1]);
    if (maxc > s) continue;
    acc += pi_pow * std::exp(-x[k - 1] * x[k - 1]) * vandermonde_sq(x.data(), k);
  }
  return g * acc / static_cast<double>(samples);
}

std::vector<std::pair<double, double>> exact_word_statistic_law(int k, int length) {
  double total_d = std::pow(static_cast<double>(k), length);
  if (total_d > static_cast<double>(1u << 22)) {
    throw RangeError("exact_word_statistic_law: enumeration too large");
  }
  const std::uint64_t total = static_cast<std::uint64_t>(total_d + 0.5);
  std::vector<std::uint64_t> counts(length + 1, 0);
  Word w;
  w.alphabet_size = k;
  w.letters.assign(length, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < length; ++i) {
      w.letters[i] = static_cast<std::uint8_t>(c % k);
      c /= k;
    }
    ++counts[weak_lis_length(w)];
  }
  std::vector<std::pair<double, double>> law;
  for (int l = 0; l <= length; ++l) {
    if (counts[l] == 0) continue;
    law.emplace_back(word_statistic(l, length, k),
                     static_cast<double>(counts[l]) / static_cast<double>(total));
  }
  return law;
}

EmpiricalSample digit_words_experiment(const std::vector<std::uint8_t>& digits, int base,
                                       int word_len) {
  if (base < 2 || base > 36) throw RangeError("digit_words_experiment: base must be in [2, 36]");
  if (word_len < 1) throw RangeError("digit_words_experiment: word_len must be positive");
  if (digits.size() < static_cast<std::size_t>(word_len)) {
    throw InsufficientDataError("digit_words_experiment: stream shorter than one word");
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= base) {
      throw ParseError("digit_words_experiment: digit out of base range at offset " +
                       std::to_string(i));
    }
  }
  const std::size_t words = digits.size() / static_cast<std::size_t>(word_len);
  EmpiricalSample sample;
  sample.model = "digit-words";
  sample.params = "base=" + std::to_string(base) + " wordlen=" + std::to_string(word_len);
  sample.values.reserve(words);
  Word w;
  w.alphabet_size = base;
  for (std::size_t j = 0; j < words; ++j) {
    w.letters.assign(digits.begin() + j * word_len, digits.begin() + (j + 1) * word_len);
    sample.values.push_back(word_statistic(weak_lis_length(w), word_len, base));
  }
  return sample;
}

}  // namespace rmt
