#include "rmt/zeta.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include "rmt/errors.hpp"
#include "rmt/kernels.hpp"
#include "rmt/stats.hpp"

namespace rmt {

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_zeros: cannot open " + path);
  ZeroTable table;
  table.source = path;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    const char* begin = line.c_str() + start;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
      throw ParseError("load_zeros: non-numeric data at line " + std::to_string(lineno));
    }
    for (const char* p = end; *p; ++p) {
      if (*p != ' ' && *p != '\t' && *p != '\r') {
        throw ParseError("load_zeros: trailing junk at line " + std::to_string(lineno));
      }
    }
    if (v <= 0.0) {
      throw ParseError("load_zeros: nonpositive zero at line " + std::to_string(lineno));
    }
    if (!table.gammas.empty() && v <= table.gammas.back()) {
      throw ParseError("load_zeros: non-ascending value at line " + std::to_string(lineno));
    }
    table.gammas.push_back(v);
  }
  if (table.gammas.empty()) throw InsufficientDataError("load_zeros: empty table");
  return table;
}

EmpiricalSample unfold_zeros(const ZeroTable& table) {
  constexpr double kE = 2.718281828459045235;
  EmpiricalSample out;
  out.model = "zeta-zeros";
  out.params = "source=" + table.source;
  out.values.reserve(table.gammas.size());
  for (double g : table.gammas) {
    if (g <= kE) throw RangeError("unfold_zeros: all gammas must exceed e");
    out.values.push_back(g * std::log(g) / (2.0 * M_PI));
  }
  return out;
}

ZetaReport zeta_report(const ZeroTable& table, std::size_t skip, double bin_width,
                       double bin_max) {
  ZetaReport report;
  report.zeros_total = table.gammas.size();
  report.zeros_skipped = std::min(skip, table.gammas.size());
  if (table.gammas.size() - report.zeros_skipped < 10000) {
    throw SizeError("zeta_report: need at least 10^4 zeros after the skip");
  }
  ZeroTable tail;
  tail.source = table.source;
  tail.gammas.assign(table.gammas.begin() + report.zeros_skipped, table.gammas.end());
  EmpiricalSample unfolded = unfold_zeros(tail);
  report.zeros_used = unfolded.values.size();

  // Spacings against the Gaudin density.  The unfolded sequence has unit
  // mean spacing only asymptotically; spacings beyond the table end (an
  // O(1e-8) tail for clean data) are clamped to it.
  EmpiricalSample spacings = spacing_histogram(unfolded);
  report.mean_spacing = sample_mean(spacings.values);
  const DistributionTable gaudin = spacing_cdf();
  for (double& v : spacings.values) {
    if (v > gaudin.t_max) v = gaudin.t_max;
    if (v < 0.0) v = 0.0;
  }
  report.spacing_ks = ks_distance(spacings, gaudin);
  report.pass_spacing = report.spacing_ks <= report.spacing_threshold;

  // Pair correlation within the central window vs the sine-kernel integral.
  std::vector<double> edges;
  for (double e = 0.0; e <= bin_max + 1e-9; e += bin_width) edges.push_back(e);
  const double span = unfolded.values.back() - unfolded.values.front();
  report.window = 0.25 * span;
  PairCorrelationEstimate est = pair_correlation(unfolded, edges, report.window);
  report.max_pair_delta = 0.0;
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    ZetaBinDelta d;
    d.a = edges[b];
    d.b = edges[b + 1];
    d.estimate = est.normalized[b];
    d.reference = pair_correlation_integral(d.a, d.b);
    d.delta = std::fabs(d.estimate - d.reference);
    report.max_pair_delta = std::max(report.max_pair_delta, d.delta);
    report.pair_correlation.push_back(d);
  }
  report.pass_pair = report.max_pair_delta <= report.pair_threshold;
  return report;
}

}  // namespace rmt
