// Command-line front end: table emitters, model samplers, and the
// verification suite.  Exit codes: 0 success, 2 threshold failure, 1 error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmt/aztec.hpp"
#include "rmt/bus.hpp"
#include "rmt/combinat.hpp"
#include "rmt/distribution.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"
#include "rmt/kernels.hpp"
#include "rmt/painleve.hpp"
#include "rmt/parallel.hpp"
#include "rmt/rng.hpp"
#include "rmt/stats.hpp"
#include "rmt/tracy_widom.hpp"
#include "rmt/verify.hpp"
#include "rmt/walkers.hpp"
#include "rmt/words.hpp"
#include "rmt/zeta.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::FILE* open_out(const std::string& path) {
  if (path.empty() || path == "-") return stdout;
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open output file " + path);
  return f;
}

void close_out(std::FILE* f) {
  if (f != stdout) std::fclose(f);
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << j.dump(2) << "\n";
  }
}

json sample_summary(const rmt::EmpiricalSample& s) {
  return json{{"count", s.values.size()},
              {"mean", rmt::sample_mean(s.values)},
              {"sd", rmt::sample_sd(s.values)}};
}

// Shared shape of every model report.
json model_report(const std::string& model, const json& params, std::uint64_t seed,
                  const rmt::EmpiricalSample& sample, std::optional<double> ks,
                  std::optional<double> threshold, const std::string& reference) {
  json j{{"schema_version", kSchemaVersion},
         {"model", model},
         {"params", params},
         {"seed", seed},
         {"sample", sample_summary(sample)}};
  if (ks) {
    j["reference"] = reference;
    j["ks_distance"] = *ks;
    if (threshold) {
      j["ks_threshold"] = *threshold;
      j["pass"] = *ks <= *threshold;
    }
  }
  return j;
}

int finish_report(const json& report, const std::string& out) {
  write_json(report, out);
  if (report.contains("pass") && !report["pass"].get<bool>()) return 2;
  return 0;
}

void emit_samples_csv(const rmt::EmpiricalSample& s, const std::string& path) {
  if (path.empty()) return;
  std::FILE* f = open_out(path);
  std::fprintf(f, "draw,value\n");
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    std::fprintf(f, "%zu,%.17g\n", i, s.values[i]);
  }
  close_out(f);
}

std::vector<std::uint8_t> read_digit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rmt::ParseError("digits: cannot open " + path);
  std::string line;
  std::vector<std::uint8_t> digits;
  bool first = true;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      // Optional exponent line ("q = -3" or similar) ahead of the digits.
      std::size_t i = line.find_first_not_of(" \t");
      if (i != std::string::npos && (line[i] == 'q' || line[i] == 'Q')) continue;
    }
    for (char c : line) {
      ++offset;
      if (c == ' ' || c == '\t' || c == '\r' || c == '.') continue;
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'z') {
        v = 10 + c - 'a';
      } else if (c >= 'A' && c <= 'Z') {
        v = 10 + c - 'A';
      } else {
        throw rmt::ParseError("digits: unexpected character at offset " + std::to_string(offset));
      }
      digits.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return digits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-matrix universality laboratory"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int threads = 0;
  app.add_option("--seed", seed, "base RNG seed (every artifact records it)");
  app.add_option("--threads", threads, "worker threads (default: RMT_THREADS or all cores)");

  // ---- table emitters ----
  auto* tw = app.add_subcommand("tw-table", "Tracy-Widom F1/F2/F4 CDF table as CSV");
  std::string tw_out;
  double tw_tol = 1e-10;
  tw->add_option("--out", tw_out, "output file (default stdout)");
  tw->add_option("--tol", tw_tol, "Painleve integration tolerance");

  auto* gap = app.add_subcommand("gap", "sine-kernel gap probability on (-x, x)");
  std::string gap_out;
  double gap_min = 0.05, gap_max = 3.0, gap_step = 0.05;
  gap->add_option("--min", gap_min);
  gap->add_option("--max", gap_max);
  gap->add_option("--step", gap_step);
  gap->add_option("--out", gap_out);

  auto* spacing = app.add_subcommand("spacing", "Gaudin nearest-neighbor spacing density");
  std::string spacing_out;
  double spacing_umax = 5.0, spacing_h = 5e-3, spacing_grid = 0.01;
  spacing->add_option("--umax", spacing_umax);
  spacing->add_option("--h", spacing_h);
  spacing->add_option("--grid", spacing_grid);
  spacing->add_option("--out", spacing_out);

  auto* numvar = app.add_subcommand("numvar", "bulk number variance V(s)");
  std::string numvar_out;
  double nv_min = 0.5, nv_max = 50.0, nv_step = 0.5;
  numvar->add_option("--min", nv_min);
  numvar->add_option("--max", nv_max);
  numvar->add_option("--step", nv_step);
  numvar->add_option("--out", numvar_out);

  // ---- samplers ----
  auto* ens = app.add_subcommand("sample-ensemble", "sample GOE/GUE/GSE spectra");
  int ens_beta = 2, ens_n = 100;
  std::size_t ens_draws = 100;
  std::string ens_out;
  bool ens_full = false;
  ens->add_option("--beta", ens_beta)->check(CLI::IsMember({1, 2, 4}));
  ens->add_option("--n", ens_n)->required();
  ens->add_option("--draws", ens_draws);
  ens->add_option("--out", ens_out, "CSV output (default stdout)");
  ens->add_flag("--full", ens_full, "emit full spectra, not just the edge");

  auto* patience = app.add_subcommand("patience", "patience-sorting pile counts");
  int pat_n = 4096;
  std::size_t pat_draws = 20000;
  std::string pat_out, pat_report;
  double pat_threshold = 0.06;
  patience->add_option("--n", pat_n);
  patience->add_option("--draws", pat_draws);
  patience->add_option("--out", pat_out, "per-draw CSV");
  patience->add_option("--report", pat_report, "JSON report path (default stdout)");
  patience->add_option("--ks-threshold", pat_threshold);

  auto* boarding = app.add_subcommand("boarding", "airplane boarding times");
  int board_n = 4096;
  std::size_t board_draws = 20000;
  std::string board_out, board_report;
  double board_threshold = 0.06;
  boarding->add_option("--n", board_n);
  boarding->add_option("--draws", board_draws);
  boarding->add_option("--out", board_out);
  boarding->add_option("--report", board_report);
  boarding->add_option("--ks-threshold", board_threshold);

  auto* words = app.add_subcommand("words", "random-word weak-LIS statistics");
  int words_k = 2, words_len = 256;
  std::size_t words_draws = 2000;
  std::string words_out, words_report;
  double words_threshold = 0.08;
  words->add_option("--k", words_k)->check(CLI::Range(2, 4));
  words->add_option("--wordlen", words_len);
  words->add_option("--draws", words_draws);
  words->add_option("--out", words_out);
  words->add_option("--report", words_report);
  words->add_option("--ks-threshold", words_threshold);

  auto* digits = app.add_subcommand("digits", "digit-stream words experiment");
  std::string digits_file, digits_out, digits_report;
  int digits_base = 2, digits_len = 256;
  double digits_threshold = 0.08;
  digits->add_option("--file", digits_file)->required();
  digits->add_option("--base", digits_base);
  digits->add_option("--wordlen", digits_len);
  digits->add_option("--out", digits_out);
  digits->add_option("--report", digits_report);
  digits->add_option("--ks-threshold", digits_threshold);

  auto* walkers = app.add_subcommand("walkers", "random-turns vicious walkers");
  std::string walkers_variant = "one";
  int walkers_n = 4096;
  std::size_t walkers_draws = 20000;
  std::string walkers_out, walkers_report;
  walkers->add_option("--variant", walkers_variant)->check(CLI::IsMember({"one", "return"}));
  walkers->add_option("--n", walkers_n);
  walkers->add_option("--draws", walkers_draws);
  walkers->add_option("--out", walkers_out);
  walkers->add_option("--report", walkers_report);

  auto* aztec = app.add_subcommand("aztec", "uniform Aztec diamond tilings");
  int aztec_n = 64;
  std::size_t aztec_draws = 100;
  double aztec_alpha = 0.5;
  std::string aztec_tilings, aztec_report;
  aztec->add_option("--n", aztec_n);
  aztec->add_option("--draws", aztec_draws);
  aztec->add_option("--alpha", aztec_alpha);
  aztec->add_option("--emit-tilings", aztec_tilings, "write sampled tilings (x y orient lines)");
  aztec->add_option("--report", aztec_report);

  auto* bus = app.add_subcommand("bus", "non-intersecting Poisson bus paths");
  int bus_n = 3, bus_route = 10, bus_x = 5;
  double bus_horizon = 10.0;
  std::size_t bus_draws = 1000;
  std::string bus_out, bus_report;
  bus->add_option("--n", bus_n);
  bus->add_option("--horizon", bus_horizon);
  bus->add_option("--route", bus_route);
  bus->add_option("--x", bus_x);
  bus->add_option("--draws", bus_draws);
  bus->add_option("--out", bus_out);
  bus->add_option("--report", bus_report);

  auto* zeta = app.add_subcommand("zeta", "Riemann zero statistics vs GUE");
  std::string zeta_file, zeta_out;
  std::size_t zeta_skip = 1000;
  double zeta_bin = 0.25, zeta_bin_max = 3.0;
  zeta->add_option("--file", zeta_file)->required();
  zeta->add_option("--skip", zeta_skip);
  zeta->add_option("--bins", zeta_bin, "pair-correlation bin width");
  zeta->add_option("--bin-max", zeta_bin_max);
  zeta->add_option("--out", zeta_out, "JSON report path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  bool v_quick = false, v_deep = false;
  std::string v_zeta_file, v_out;
  std::vector<std::string> v_overrides;
  verify->add_flag("--quick", v_quick, "fast sanity tier (seconds)");
  verify->add_flag("--deep", v_deep, "5x draws, tightened tolerances (hours)");
  verify->add_option("--zeta-file", v_zeta_file, "zero table for the optional zeta criterion");
  verify->add_option("--threshold", v_overrides, "override, e.g. --threshold 6=0.04")
      ->expected(-1);
  verify->add_option("--out", v_out, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) setenv("RMT_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (tw->parsed()) {
      const rmt::PainleveSolution sol = rmt::solve_painleve_ii(8.0, -10.0, tw_tol);
      const rmt::DistributionTable f1 = rmt::tracy_widom(1, sol);
      const rmt::DistributionTable f2 = rmt::tracy_widom(2, sol);
      const rmt::DistributionTable f4 = rmt::tracy_widom(4, sol);
      std::FILE* f = open_out(tw_out);
      std::fprintf(f, "t,F1,F2,F4\n");
      for (std::size_t i = 0; i < f2.size(); ++i) {
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", f2.t_at(i), f1.cdf[i], f2.cdf[i],
                     f4.cdf[i]);
      }
      close_out(f);
      return 0;
    }

    if (gap->parsed()) {
      std::FILE* f = open_out(gap_out);
      std::fprintf(f, "x,value\n");
      for (double x = gap_min; x <= gap_max + 1e-12; x += gap_step) {
        std::fprintf(f, "%.17g,%.17g\n", x, rmt::gap_probability(x));
      }
      close_out(f);
      return 0;
    }

    if (spacing->parsed()) {
      const rmt::SpacingDensity d = rmt::spacing_density(spacing_umax, spacing_h, spacing_grid);
      std::FILE* f = open_out(spacing_out);
      std::fprintf(f, "u,p\n");
      for (std::size_t i = 0; i < d.grid.size(); ++i) {
        std::fprintf(f, "%.17g,%.17g\n", d.grid[i], d.p[i]);
      }
      close_out(f);
      return 0;
    }

    if (numvar->parsed()) {
      std::FILE* f = open_out(numvar_out);
      std::fprintf(f, "s,V\n");
      for (double s = nv_min; s <= nv_max + 1e-12; s += nv_step) {
        std::fprintf(f, "%.17g,%.17g\n", s, rmt::number_variance(s));
      }
      close_out(f);
      return 0;
    }

    if (ens->parsed()) {
      const rmt::EnsembleSpec spec{ens_beta, ens_n};
      std::vector<rmt::Spectrum> spectra(ens_draws);
      rmt::parallel_for(ens_draws, [&](std::size_t i) {
        spectra[i] = rmt::sample_matrix(spec, seed, i);
      });
      std::FILE* f = open_out(ens_out);
      std::fprintf(f, ens_full ? "draw,lambda_max,edge_statistic,spectrum...\n"
                               : "draw,lambda_max,edge_statistic\n");
      for (std::size_t i = 0; i < spectra.size(); ++i) {
        std::fprintf(f, "%zu,%.17g,%.17g", i, spectra[i].values.back(),
                     rmt::edge_statistic(spectra[i]));
        if (ens_full) {
          for (double v : spectra[i].values) std::fprintf(f, ",%.17g", v);
        }
        std::fprintf(f, "\n");
      }
      close_out(f);
      return 0;
    }

    if (patience->parsed() || boarding->parsed()) {
      const bool is_boarding = boarding->parsed();
      const int n = is_boarding ? board_n : pat_n;
      const std::size_t draws = is_boarding ? board_draws : pat_draws;
      const double threshold = is_boarding ? board_threshold : pat_threshold;
      rmt::EmpiricalSample sample;
      sample.model = is_boarding ? "boarding" : "patience";
      sample.seed = seed;
      sample.values.resize(draws);
      const double center = 2.0 * std::sqrt(static_cast<double>(n));
      const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
      rmt::parallel_for(draws, [&](std::size_t i) {
        rmt::StreamRng rng(seed, i);
        const rmt::Permutation p = rmt::Permutation::random(n, rng);
        const int stat = is_boarding ? rmt::boarding_time(p) : rmt::patience_piles(p);
        sample.values[i] = (stat - center) / scale;
      });
      emit_samples_csv(sample, is_boarding ? board_out : pat_out);
      const double ks = rmt::ks_distance(sample, rmt::tracy_widom(2));
      const json report = model_report(sample.model, {{"n", n}, {"draws", draws}}, seed, sample,
                                       ks, threshold, "F2");
      return finish_report(report, is_boarding ? board_report : pat_report);
    }

    if (words->parsed()) {
      rmt::EmpiricalSample sample;
      sample.model = "words";
      sample.seed = seed;
      sample.values.resize(words_draws);
      rmt::parallel_for(words_draws, [&](std::size_t i) {
        rmt::StreamRng rng(seed, i);
        const rmt::Word w = rmt::random_word(words_len, words_k, rng);
        sample.values[i] = rmt::word_statistic(rmt::weak_lis_length(w), words_len, words_k);
      });
      emit_samples_csv(sample, words_out);
      const double ks = rmt::ks_distance(sample, rmt::word_limit_cdf(words_k));
      const json report =
          model_report("words", {{"k", words_k}, {"wordlen", words_len}, {"draws", words_draws}},
                       seed, sample, ks, words_threshold, "word-limit");
      return finish_report(report, words_report);
    }

    if (digits->parsed()) {
      const std::vector<std::uint8_t> stream = read_digit_file(digits_file);
      const rmt::EmpiricalSample sample =
          rmt::digit_words_experiment(stream, digits_base, digits_len);
      emit_samples_csv(sample, digits_out);
      std::optional<double> ks;
      if (digits_base >= 2 && digits_base <= 4 && sample.values.size() >= 50) {
        ks = rmt::ks_distance(sample, rmt::word_limit_cdf(digits_base));
      }
      json report = model_report(
          "digits", {{"file", digits_file}, {"base", digits_base}, {"wordlen", digits_len}}, seed,
          sample, ks, ks ? std::optional<double>(digits_threshold) : std::nullopt, "word-limit");
      report["digits_read"] = stream.size();
      return finish_report(report, digits_report);
    }

    if (walkers->parsed()) {
      const rmt::WalkerVariant variant = walkers_variant == "one"
                                             ? rmt::WalkerVariant::OneSided
                                             : rmt::WalkerVariant::Returning;
      const rmt::WalkerSampler sampler(variant, walkers_n);
      rmt::EmpiricalSample sample;
      sample.model = walkers_variant == "one" ? "walkers-one-sided" : "walkers-returning";
      sample.seed = seed;
      sample.values.resize(walkers_draws);
      const double center = 2.0 * std::sqrt(static_cast<double>(walkers_n));
      const double scale = std::pow(static_cast<double>(walkers_n), 1.0 / 6.0);
      rmt::parallel_for(walkers_draws, [&](std::size_t i) {
        rmt::StreamRng rng(seed, i);
        sample.values[i] = (sampler.sample_distance(rng) - center) / scale;
      });
      emit_samples_csv(sample, walkers_out);
      const int beta = variant == rmt::WalkerVariant::OneSided ? 1 : 2;
      const double threshold = beta == 1 ? 0.07 : 0.06;
      const double ks = rmt::ks_distance(sample, rmt::tracy_widom(beta));
      const json report = model_report(
          sample.model, {{"variant", walkers_variant}, {"n", walkers_n}, {"draws", walkers_draws}},
          seed, sample, ks, threshold, beta == 1 ? "F1" : "F2");
      return finish_report(report, walkers_report);
    }

    if (aztec->parsed()) {
      std::FILE* tf = aztec_tilings.empty() ? nullptr : open_out(aztec_tilings);
      rmt::EmpiricalSample offsets;
      offsets.model = "aztec-arctic";
      offsets.seed = seed;
      for (std::size_t i = 0; i < aztec_draws; ++i) {
        rmt::StreamRng rng(seed, i);
        const rmt::AztecTiling t = rmt::sample_aztec(aztec_n, rng);
        if (tf) {
          std::fprintf(tf, "# draw %zu\n", i);
          for (const rmt::Domino& d : t.dominos) {
            std::fprintf(tf, "%d %d %c\n", d.x, d.y, d.horizontal ? 'h' : 'v');
          }
        }
        if (aztec_n >= 8) {
          offsets.values.push_back(rmt::arctic_boundary_offset(t, aztec_alpha));
        }
      }
      if (tf) close_out(tf);
      json report{{"schema_version", kSchemaVersion},
                  {"model", "aztec"},
                  {"params", {{"n", aztec_n}, {"draws", aztec_draws}, {"alpha", aztec_alpha}}},
                  {"seed", seed}};
      if (!offsets.values.empty()) report["arctic_offsets"] = sample_summary(offsets);
      write_json(report, aztec_report);
      return 0;
    }

    if (bus->parsed()) {
      rmt::StreamRng rng(seed, 0);
      std::vector<std::vector<double>> coords(bus_n);
      for (std::size_t i = 0; i < bus_draws; ++i) {
        const rmt::BusRealization b = rmt::sample_bus(bus_n, bus_horizon, bus_route, rng);
        const std::vector<double> y = rmt::bus_arrivals_rescaled(b, bus_x);
        for (int j = 0; j < bus_n; ++j) coords[j].push_back(y[j]);
      }
      if (!bus_out.empty()) {
        std::FILE* f = open_out(bus_out);
        std::fprintf(f, "draw");
        for (int j = 0; j < bus_n; ++j) std::fprintf(f, ",y%d", j);
        std::fprintf(f, "\n");
        for (std::size_t i = 0; i < bus_draws; ++i) {
          std::fprintf(f, "%zu", i);
          for (int j = 0; j < bus_n; ++j) std::fprintf(f, ",%.17g", coords[j][i]);
          std::fprintf(f, "\n");
        }
        close_out(f);
      }
      json per_coord = json::array();
      for (int j = 0; j < bus_n; ++j) {
        per_coord.push_back({{"mean", rmt::sample_mean(coords[j])},
                             {"sd", rmt::sample_sd(coords[j])}});
      }
      const json report{{"schema_version", kSchemaVersion},
                        {"model", "bus"},
                        {"params",
                         {{"n", bus_n},
                          {"horizon", bus_horizon},
                          {"route", bus_route},
                          {"x", bus_x},
                          {"draws", bus_draws}}},
                        {"seed", seed},
                        {"arrival_coordinates", per_coord}};
      write_json(report, bus_report);
      return 0;
    }

    if (zeta->parsed()) {
      const rmt::ZeroTable table = rmt::load_zeros(zeta_file);
      const rmt::ZetaReport rep = rmt::zeta_report(table, zeta_skip, zeta_bin, zeta_bin_max);
      json bins = json::array();
      for (const rmt::ZetaBinDelta& b : rep.pair_correlation) {
        bins.push_back({{"a", b.a},
                        {"b", b.b},
                        {"estimate", b.estimate},
                        {"reference", b.reference},
                        {"delta", b.delta}});
      }
      const json report{{"schema_version", kSchemaVersion},
                        {"model", "zeta"},
                        {"source", table.source},
                        {"zeros_total", rep.zeros_total},
                        {"zeros_skipped", rep.zeros_skipped},
                        {"zeros_used", rep.zeros_used},
                        {"mean_spacing", rep.mean_spacing},
                        {"window", rep.window},
                        {"spacing_ks", rep.spacing_ks},
                        {"spacing_threshold", rep.spacing_threshold},
                        {"pair_correlation", bins},
                        {"max_pair_delta", rep.max_pair_delta},
                        {"pair_threshold", rep.pair_threshold},
                        {"pass", rep.pass_pair && rep.pass_spacing}};
      write_json(report, zeta_out);
      return (rep.pass_pair && rep.pass_spacing) ? 0 : 2;
    }

    if (verify->parsed()) {
      rmt::VerifyOptions opts;
      opts.seed = seed;
      opts.zeta_file = v_zeta_file;
      for (const std::string& ov : v_overrides) {
        const std::size_t eq = ov.find('=');
        if (eq == std::string::npos) {
          throw rmt::ParseError("verify: threshold override must look like id=value");
        }
        opts.threshold_overrides[ov.substr(0, eq)] = std::stod(ov.substr(eq + 1));
      }
      const rmt::VerifyLevel level = v_quick   ? rmt::VerifyLevel::Quick
                                     : v_deep  ? rmt::VerifyLevel::Deep
                                               : rmt::VerifyLevel::Desk;
      const std::vector<rmt::CriterionResult> results = rmt::run_verify(level, opts);
      bool all_pass = true;
      json jr = json::array();
      for (const rmt::CriterionResult& r : results) {
        std::cout << rmt::format_result(r) << "\n";
        if (!r.pass) all_pass = false;
        jr.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"skipped", r.skipped},
                      {"measured", r.measured},
                      {"threshold", r.threshold},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
      }
      if (!v_out.empty()) {
        write_json(json{{"schema_version", kSchemaVersion},
                        {"seed", seed},
                        {"level", v_quick ? "quick" : v_deep ? "deep" : "desk"},
                        {"criteria", jr},
                        {"pass", all_pass}},
                   v_out);
      }
      return all_pass ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
