#include "rmt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "rmt/aztec.hpp"
#include "rmt/bus.hpp"
#include "rmt/combinat.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"
#include "rmt/involution.hpp"
#include "rmt/kernels.hpp"
#include "rmt/painleve.hpp"
#include "rmt/parallel.hpp"
#include "rmt/stats.hpp"
#include "rmt/tracy_widom.hpp"
#include "rmt/walkers.hpp"
#include "rmt/words.hpp"
#include "rmt/zeta.hpp"

namespace rmt {
namespace {

struct Ctx {
  VerifyOptions opts;
  VerifyLevel level = VerifyLevel::Desk;

  // Monte Carlo draw multiplier (deep tier re-runs with more data).
  std::size_t scaled(std::size_t draws) const {
    return level == VerifyLevel::Deep ? draws * 5 : draws;
  }
  double tightened(double tol) const { return level == VerifyLevel::Deep ? 0.5 * tol : tol; }
  std::uint64_t stream_base(int criterion) const {
    return static_cast<std::uint64_t>(criterion) << 32;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

double apply_override(const Ctx& ctx, const std::string& id, double threshold) {
  auto it = ctx.opts.threshold_overrides.find(id);
  return it == ctx.opts.threshold_overrides.end() ? threshold : it->second;
}

// Sample count for the Monte Carlo integration cross-check.
std::size_t level_samples(const Ctx& ctx) {
  return ctx.level == VerifyLevel::Deep ? 160'000'000 : 10'000'000;
}

// Two-sample Kolmogorov-Smirnov distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Criterion runners.  Each returns pass/fail plus the worst measured figure.

CriterionResult crit_f2_crosscheck(const Ctx& ctx) {
  CriterionResult r;
  r.id = "1";
  r.name = "F2 Painleve vs Airy-kernel determinant";
  r.threshold = apply_override(ctx, r.id, ctx.tightened(1e-6));
  const PainleveSolution& sol = default_painleve_solution();
  double worst = 0.0;
  std::ostringstream detail;
  for (double t : {-6.0, -4.0, -2.0, 0.0, 2.0, 4.0}) {
    const double f2_painleve = std::exp(-sol.j_at(t));
    const double f2_det = fredholm_det(KernelOperator::airy_tail(t, 48));
    const double delta = std::fabs(f2_painleve - f2_det);
    worst = std::max(worst, delta);
    detail << "t=" << t << ":" << fmt(delta) << " ";
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = detail.str();
  return r;
}

CriterionResult crit_tw_moments(const Ctx& ctx) {
  CriterionResult r;
  r.id = "2";
  r.name = "Tracy-Widom F2 moments";
  r.threshold = apply_override(ctx, r.id, 0.005);
  const DistributionTable f2 = tracy_widom(2);
  const double mean = distribution_mean(f2);
  const double var = distribution_variance(f2);
  const double dm = std::fabs(mean - (-1.7711));
  const double dv = std::fabs(var - 0.8132);
  r.measured = std::max(dm, dv);
  r.pass = r.measured <= r.threshold;
  r.detail = "mean=" + fmt(mean) + " var=" + fmt(var);
  return r;
}

CriterionResult crit_number_variance(const Ctx& ctx) {
  CriterionResult r;
  r.id = "3";
  r.name = "number variance log asymptotics at s=50";
  r.threshold = apply_override(ctx, r.id, 0.02);
  constexpr double kEulerGamma = 0.5772156649015328606;
  const double v = number_variance(50.0);
  const double ref = (std::log(2.0 * M_PI * 50.0) + kEulerGamma + 1.0) / (M_PI * M_PI);
  r.measured = std::fabs(v - ref);
  r.pass = r.measured <= r.threshold;
  r.detail = "V(50)=" + fmt(v) + " ref=" + fmt(ref);
  return r;
}

CriterionResult crit_s7_identities(const Ctx& ctx) {
  CriterionResult r;
  r.id = "4";
  r.name = "S7 identity chain patience=LIS=RSK=boarding=shadow";
  r.threshold = apply_override(ctx, r.id, 0.0);
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6};
  long mismatches = 0;
  long total = 0;
  do {
    Permutation p(v);
    const int piles = patience_piles(p);
    const int lis = lis_length(p);
    const Partition shape = rsk_shape(p);
    const int board = boarding_time(p);  // also asserts the shadow-line count
    const int shadow = shadow_line_count(p);
    if (piles != lis || lis != shape.row(0) || board != lis || shadow != lis) ++mismatches;
    ++total;
  } while (std::next_permutation(v.begin(), v.end()));
  r.measured = static_cast<double>(mismatches);
  r.pass = mismatches == 0 && total == 5040;
  r.detail = std::to_string(total) + " permutations, " + std::to_string(mismatches) +
             " mismatches";
  return r;
}

CriterionResult crit_patience_mc(const Ctx& ctx) {
  CriterionResult r;
  r.id = "5";
  r.name = "patience sorting vs F2 and mean pile count at N=52";
  r.threshold = apply_override(ctx, r.id, 0.06);
  const int n = 4096;
  const std::size_t draws = ctx.scaled(20000);
  const double center = 2.0 * std::sqrt(static_cast<double>(n));
  const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
  EmpiricalSample sample;
  sample.model = "patience";
  sample.seed = ctx.opts.seed;
  sample.values.resize(draws);
  const std::uint64_t base = ctx.stream_base(5);
  parallel_for(draws, [&](std::size_t i) {
    StreamRng rng(ctx.opts.seed, base + i);
    const Permutation p = Permutation::random(n, rng);
    sample.values[i] = (patience_piles(p) - center) / scale;
  });
  const double ks = ks_distance(sample, tracy_widom(2));

  const std::size_t deck_draws = ctx.scaled(200000);
  double mean52 = 0.0;
  for (std::size_t i = 0; i < deck_draws; ++i) {
    StreamRng rng(ctx.opts.seed, base + (1ull << 24) + i);
    const Permutation p = Permutation::random(52, rng);
    mean52 += patience_piles(p);
  }
  mean52 /= static_cast<double>(deck_draws);

  r.measured = ks;
  r.pass = ks <= r.threshold && std::fabs(mean52 - 12.0) <= 0.5;
  r.detail = "ks=" + fmt(ks) + " E[q52]=" + fmt(mean52) + " (target 12+-0.5)";
  return r;
}

CriterionResult crit_gue_edge(const Ctx& ctx) {
  CriterionResult r;
  r.id = "6";
  r.name = "GUE largest eigenvalue vs F2 (N=200)";
  r.threshold = apply_override(ctx, r.id, 0.05);
  const std::size_t draws = ctx.scaled(5000);
  EmpiricalSample sample;
  sample.model = "gue-edge";
  sample.seed = ctx.opts.seed;
  sample.values.resize(draws);
  const std::uint64_t base = ctx.stream_base(6);
  parallel_for(draws, [&](std::size_t i) {
    const Spectrum sp = sample_matrix({2, 200}, ctx.opts.seed, base + i);
    sample.values[i] = edge_statistic(sp);
  });
  r.measured = ks_distance(sample, tracy_widom(2));
  r.pass = r.measured <= r.threshold;
  r.detail = "ks=" + fmt(r.measured) + " over " + std::to_string(draws) + " draws";
  return r;
}

CriterionResult crit_gue_bulk(const Ctx& ctx) {
  CriterionResult r;
  r.id = "7";
  r.name = "GUE bulk: spacings, pair correlation, number variance";
  r.threshold = apply_override(ctx, r.id, 0.05);
  const int n = 400;
  const std::size_t draws = ctx.scaled(200);
  const std::uint64_t base = ctx.stream_base(7);

  std::vector<std::vector<double>> unfolded(draws);
  parallel_for(draws, [&](std::size_t i) {
    const Spectrum sp = sample_matrix({2, n}, ctx.opts.seed, base + i);
    unfolded[i] = unfold_bulk(sp, 0.25).values;
  });

  // Spacings pooled across draws vs the Gaudin density.
  EmpiricalSample spacings;
  spacings.model = "gue-bulk-spacings";
  spacings.seed = ctx.opts.seed;
  for (const auto& u : unfolded) {
    for (std::size_t k = 1; k < u.size(); ++k) spacings.values.push_back(u[k] - u[k - 1]);
  }
  const DistributionTable gaudin = spacing_cdf();
  for (double& v : spacings.values) v = std::min(v, gaudin.t_max);
  const double ks = ks_distance(spacings, gaudin);

  // Pair correlation per bin vs the sine-kernel integral.  Each unfolded
  // realization spans ~n/4 in counting units; t_N is a quarter of that.
  std::vector<double> edges;
  for (double e = 0.0; e <= 3.0 + 1e-9; e += 0.25) edges.push_back(e);
  const double window = static_cast<double>(n) / 16.0;
  PairCorrelationAccumulator acc(edges, window);
  for (const auto& u : unfolded) acc.add(u);
  const PairCorrelationEstimate est = acc.estimate();
  double worst_pair = 0.0;
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    const double ref = pair_correlation_integral(edges[b], edges[b + 1]);
    worst_pair = std::max(worst_pair, std::fabs(est.normalized[b] - ref));
  }

  // Number variance within 10% relative for s in [1, 10].
  std::vector<double> svals;
  for (int s = 1; s <= 10; ++s) svals.push_back(s);
  const std::vector<double> nv = number_variance_estimate(unfolded, svals);
  double worst_nv = 0.0;
  for (std::size_t k = 0; k < svals.size(); ++k) {
    const double ref = number_variance(svals[k]);
    worst_nv = std::max(worst_nv, std::fabs(nv[k] - ref) / ref);
  }

  r.measured = std::max(ks, worst_pair);
  r.pass = ks <= r.threshold && worst_pair <= 0.05 && worst_nv <= 0.10;
  r.detail = "spacing ks=" + fmt(ks) + " pair max|d|=" + fmt(worst_pair) +
             " numvar rel=" + fmt(worst_nv);
  return r;
}

CriterionResult crit_involutions(const Ctx& ctx) {
  CriterionResult r;
  r.id = "8";
  r.name = "involutions: RSK row 1 vs F1, row 2 vs F4";
  r.threshold = apply_override(ctx, r.id, 0.07);
  const int n = 4096;
  const std::size_t draws = ctx.scaled(20000);
  const double center = 2.0 * std::sqrt(static_cast<double>(n));
  const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
  const InvolutionSampler sampler(n);
  EmpiricalSample row1, row2;
  row1.model = "involution-row1";
  row2.model = "involution-row2";
  row1.seed = row2.seed = ctx.opts.seed;
  row1.values.resize(draws);
  row2.values.resize(draws);
  const std::uint64_t base = ctx.stream_base(8);
  parallel_for(draws, [&](std::size_t i) {
    StreamRng rng(ctx.opts.seed, base + i);
    const Permutation inv = sampler.sample(rng);
    const auto [r1, r2] = rsk_first_two_rows(inv);
    row1.values[i] = (r1 - center) / scale;
    row2.values[i] = (r2 - center) / scale;
  });
  const double ks1 = ks_distance(row1, tracy_widom(1));
  const double ks2 = ks_distance(row2, tracy_widom(4));
  r.measured = std::max(ks1, ks2 * 7.0 / 9.0);  // row-2 budget is 0.09
  r.pass = ks1 <= r.threshold && ks2 <= apply_override(ctx, "8b", 0.09);
  r.detail = "row1 ks=" + fmt(ks1) + " (<=0.07), row2 ks=" + fmt(ks2) + " (<=0.09)";
  return r;
}

CriterionResult crit_walkers(const Ctx& ctx) {
  CriterionResult r;
  r.id = "9";
  r.name = "vicious walkers: exact counts, F1 and F2 limits";
  r.threshold = apply_override(ctx, r.id, 0.07);
  // Exact enumeration against the involution numbers.
  const auto inv_counts = InvolutionSampler::counts(6);
  bool counts_ok = true;
  std::ostringstream counts_detail;
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t walks = count_walks_one_sided(n);
    if (walks != inv_counts[n]) counts_ok = false;
    counts_detail << walks << (n < 6 ? "," : "");
  }
  bool returning_ok = true;
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    if (count_walks_returning(n) != factorial) returning_ok = false;
  }

  const int n = 4096;
  const std::size_t draws = ctx.scaled(20000);
  const double center = 2.0 * std::sqrt(static_cast<double>(n));
  const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
  const std::uint64_t base = ctx.stream_base(9);

  const WalkerSampler one_sided(WalkerVariant::OneSided, n);
  EmpiricalSample d1;
  d1.model = "walker-one-sided";
  d1.seed = ctx.opts.seed;
  d1.values.resize(draws);
  parallel_for(draws, [&](std::size_t i) {
    StreamRng rng(ctx.opts.seed, base + i);
    d1.values[i] = (one_sided.sample_distance(rng) - center) / scale;
  });
  const double ks1 = ks_distance(d1, tracy_widom(1));

  const WalkerSampler returning(WalkerVariant::Returning, n);
  EmpiricalSample d2;
  d2.model = "walker-returning";
  d2.seed = ctx.opts.seed;
  d2.values.resize(draws);
  parallel_for(draws, [&](std::size_t i) {
    StreamRng rng(ctx.opts.seed, base + (1ull << 24) + i);
    d2.values[i] = (returning.sample_distance(rng) - center) / scale;
  });
  const double ks2 = ks_distance(d2, tracy_widom(2));

  r.measured = std::max(ks1, ks2 * 7.0 / 6.0);
  r.pass = counts_ok && returning_ok && ks1 <= r.threshold && ks2 <= 0.06;
  r.detail = "walk counts " + counts_detail.str() + (counts_ok ? " ok" : " MISMATCH") +
             "; one-sided ks=" + fmt(ks1) + " (<=0.07), returning ks=" + fmt(ks2) + " (<=0.06)";
  return r;
}

CriterionResult crit_aztec(const Ctx& ctx) {
  CriterionResult r;
  r.id = "10";
  r.name = "Aztec diamonds: counts, uniformity, arctic fluctuation";
  r.threshold = apply_override(ctx, r.id, 0.10);
  bool counts_ok = true;
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t expected = 1ull << (n * (n + 1) / 2);
    if (count_tilings_brute(n) != expected) counts_ok = false;
  }

  // Chi-square uniformity over the 8 order-2 tilings.
  const std::size_t unif_draws = ctx.scaled(100000);
  std::map<std::string, std::uint64_t> freq;
  const std::uint64_t base = ctx.stream_base(10);
  for (std::size_t i = 0; i < unif_draws; ++i) {
    StreamRng rng(ctx.opts.seed, base + i);
    freq[tiling_key(sample_aztec(2, rng))]++;
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(unif_draws) / 8.0;
  std::uint64_t seen = 0;
  for (const auto& [key, count] : freq) {
    chi2 += (count - expected) * (count - expected) / expected;
    seen += count;
  }
  // chi^2_{7} upper 1e-3 quantile.
  const bool chi_ok = freq.size() == 8 && seen == unif_draws && chi2 <= 24.321886;

  // Arctic boundary fluctuation, standardized, against standardized F2.
  const std::size_t arctic_draws = ctx.scaled(2000);
  EmpiricalSample offsets;
  offsets.model = "aztec-arctic";
  offsets.seed = ctx.opts.seed;
  offsets.values.resize(arctic_draws);
  parallel_for(arctic_draws, [&](std::size_t i) {
    StreamRng rng(ctx.opts.seed, base + (1ull << 24) + i);
    const AztecTiling t = sample_aztec(256, rng);
    offsets.values[i] = arctic_boundary_offset(t, 0.5);
  });
  const StandardizeResult std_offsets = standardize(offsets);
  const DistributionTable f2 = tracy_widom(2);
  const DistributionTable f2_std =
      standardized_table(f2, distribution_mean(f2), std::sqrt(distribution_variance(f2)));
  const double ks = ks_distance(std_offsets.sample, f2_std);

  r.measured = ks;
  r.pass = counts_ok && chi_ok && ks <= r.threshold;
  r.detail = std::string("counts ") + (counts_ok ? "ok" : "MISMATCH") + ", chi2=" + fmt(chi2) +
             " (<=24.32), arctic ks=" + fmt(ks);
  return r;
}

CriterionResult crit_words(const Ctx& ctx) {
  CriterionResult r;
  r.id = "11";
  r.name = "random words: exact law vs MC, quadrature vs MC integration";
  r.threshold = apply_override(ctx, r.id, 0.02);
  const auto law = exact_word_statistic_law(2, 12);
  const std::size_t draws = ctx.scaled(100000);
  EmpiricalSample mc;
  mc.model = "words-k2";
  mc.seed = ctx.opts.seed;
  mc.values.resize(draws);
  const std::uint64_t base = ctx.stream_base(11);
  for (std::size_t i = 0; i < draws; ++i) {
    StreamRng rng(ctx.opts.seed, base + i);
    const Word w = random_word(12, 2, rng);
    mc.values[i] = word_statistic(weak_lis_length(w), 12, 2);
  }
  const double tv = tv_distance_discrete(mc, law);

  const DistributionTable cdf2 = word_limit_cdf(2);
  StreamRng rng(ctx.opts.seed, base + (1ull << 24));
  double worst_int = 0.0;
  const std::size_t mc_samples = level_samples(ctx);
  for (double s : {0.5, 1.0, 2.0}) {
    const double q = cdf2.value(s);
    const double m = word_limit_cdf_mc(2, s, mc_samples, rng);
    worst_int = std::max(worst_int, std::fabs(q - m));
  }
  const double int_tol = ctx.tightened(1e-3);

  r.measured = tv;
  r.pass = tv <= r.threshold && worst_int <= int_tol;
  r.detail = "tv=" + fmt(tv) + " (<=0.02), quadrature-vs-mc=" + fmt(worst_int) + " (<=" +
             fmt(int_tol) + ")";
  return r;
}

CriterionResult crit_bus(const Ctx& ctx) {
  CriterionResult r;
  r.id = "12";
  r.name = "bus model: rejection sampler vs explicit-density MCMC";
  r.threshold = apply_override(ctx, r.id, 0.08);
  const int n = 3, route = 10, x = 5;
  const double horizon = 10.0;
  const std::size_t draws = ctx.scaled(10000);
  std::vector<std::vector<double>> rejection(n);
  const std::uint64_t base = ctx.stream_base(12);
  {
    StreamRng rng(ctx.opts.seed, base);
    for (std::size_t i = 0; i < draws; ++i) {
      const BusRealization bus = sample_bus(n, horizon, route, rng);
      const std::vector<double> y = bus_arrivals_rescaled(bus, x);
      for (int j = 0; j < n; ++j) rejection[j].push_back(y[j]);
    }
  }
  std::vector<std::vector<double>> mcmc(n);
  {
    StreamRng rng(ctx.opts.seed, base + 1);
    BusArrivalMcmc chain(n, route, x);
    chain.burn_in(rng, 5000);
    for (std::size_t i = 0; i < draws; ++i) {
      const std::vector<double> y = chain.sample(rng, 10);
      for (int j = 0; j < n; ++j) mcmc[j].push_back(y[j]);
    }
  }
  double worst = 0.0;
  std::ostringstream detail;
  for (int j = 0; j < n; ++j) {
    const double ks = ks_two_sample(rejection[j], mcmc[j]);
    worst = std::max(worst, ks);
    detail << "y" << j << ":" << fmt(ks) << " ";
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = detail.str();
  return r;
}

CriterionResult crit_zeta(const Ctx& ctx) {
  CriterionResult r;
  r.id = "13";
  r.name = "zeta zeros vs GUE predictions (data-dependent)";
  r.threshold = apply_override(ctx, r.id, 0.05);
  if (ctx.opts.zeta_file.empty()) {
    r.skipped = true;
    r.pass = true;
    r.detail = "skipped: no zero table configured";
    return r;
  }
  const ZeroTable table = load_zeros(ctx.opts.zeta_file);
  const ZetaReport report = zeta_report(table);
  r.measured = std::max(report.max_pair_delta, report.spacing_ks);
  r.pass = report.pass_pair && report.spacing_ks <= r.threshold;
  r.detail = "pair max|d|=" + fmt(report.max_pair_delta) + " spacing ks=" +
             fmt(report.spacing_ks) + " zeros=" + std::to_string(report.zeros_used);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_verify(VerifyLevel level, const VerifyOptions& opts) {
  Ctx ctx{opts, level};
  using Runner = std::function<CriterionResult(const Ctx&)>;
  std::vector<Runner> runners;
  if (level == VerifyLevel::Quick) {
    runners = {crit_f2_crosscheck, crit_tw_moments, crit_number_variance, crit_s7_identities};
  } else {
    runners = {crit_f2_crosscheck, crit_tw_moments, crit_number_variance, crit_s7_identities,
               crit_patience_mc,   crit_gue_edge,   crit_gue_bulk,        crit_involutions,
               crit_walkers,       crit_aztec,      crit_words,           crit_bus,
               crit_zeta};
  }
  std::vector<CriterionResult> results;
  results.reserve(runners.size());
  for (const Runner& run : runners) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run(ctx);
    } catch (const std::exception& e) {
      r.id = "?";
      r.name = "criterion aborted";
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.skipped ? "[SKIP]" : r.pass ? "[PASS]" : "[FAIL]") << " " << r.id << " " << r.name
     << ": " << r.detail;
  os.precision(3);
  os << " (" << r.seconds << "s)";
  return os.str();
}

}  // namespace rmt
