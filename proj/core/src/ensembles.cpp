#include "rmt/ensembles.hpp"

#include <cmath>
#include <string>

#include "rmt/errors.hpp"
#include "rmt/linalg.hpp"

namespace rmt {
namespace {

void check_spec(const EnsembleSpec& spec) {
  if (spec.beta != 1 && spec.beta != 2 && spec.beta != 4) {
    throw RangeError("EnsembleSpec: beta must be 1, 2 or 4");
  }
  if (spec.n < 2) throw RangeError("EnsembleSpec: n must be >= 2");
}

// exp(-tr M^2) for real symmetric M: diagonal variance 1/2, off-diagonal 1/4.
SquareMatrix sample_goe(int n, StreamRng& rng) {
  SquareMatrix m(n);
  const double sd_diag = std::sqrt(0.5);
  for (int i = 0; i < n; ++i) {
    m(i, i) = sd_diag * rng.normal();
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * rng.normal();
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

// Real-symmetric embedding [[A, -B], [B, A]] of the Hermitian matrix A + iB;
// the embedded spectrum is the Hermitian spectrum doubled.
SquareMatrix embed_hermitian(const SquareMatrix& re, const SquareMatrix& im) {
  const std::size_t n = re.size();
  SquareMatrix s(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s(i, j) = re(i, j);
      s(n + i, n + j) = re(i, j);
      s(i, n + j) = -im(i, j);
      s(n + i, j) = im(i, j);
    }
  }
  return s;
}

// exp(-tr M^2) for Hermitian M: diagonal variance 1/2, Re/Im of each
// off-diagonal entry variance 1/4.
void sample_gue_parts(int n, StreamRng& rng, SquareMatrix& re, SquareMatrix& im) {
  re = SquareMatrix(n);
  im = SquareMatrix(n);
  const double sd_diag = std::sqrt(0.5);
  for (int i = 0; i < n; ++i) {
    re(i, i) = sd_diag * rng.normal();
    for (int j = i + 1; j < n; ++j) {
      const double x = 0.5 * rng.normal();
      const double y = 0.5 * rng.normal();
      re(i, j) = x;
      re(j, i) = x;
      im(i, j) = y;
      im(j, i) = -y;
    }
  }
}

// Hermitian self-dual 2n x 2n from quaternion blocks.  exp(-tr M^2) makes
// the diagonal scalars variance 1/4 and each of the four components of an
// off-diagonal quaternion variance 1/8.
void sample_gse_parts(int n, StreamRng& rng, SquareMatrix& re, SquareMatrix& im) {
  re = SquareMatrix(2 * n);
  im = SquareMatrix(2 * n);
  const double sd_diag = 0.5;                  // sqrt(1/4)
  const double sd_off = std::sqrt(0.125);      // sqrt(1/8)
  for (int a = 0; a < n; ++a) {
    const double d = sd_diag * rng.normal();
    re(2 * a, 2 * a) = d;
    re(2 * a + 1, 2 * a + 1) = d;
    for (int b = a + 1; b < n; ++b) {
      const double q0 = sd_off * rng.normal();  // alpha = q0 + i q1
      const double q1 = sd_off * rng.normal();
      const double q2 = sd_off * rng.normal();  // beta = q2 + i q3
      const double q3 = sd_off * rng.normal();
      const int i = 2 * a, j = 2 * b;
      // Block [[alpha, beta], [-conj(beta), conj(alpha)]].
      re(i, j) = q0;       im(i, j) = q1;
      re(i, j + 1) = q2;   im(i, j + 1) = q3;
      re(i + 1, j) = -q2;  im(i + 1, j) = q3;
      re(i + 1, j + 1) = q0; im(i + 1, j + 1) = -q1;
      // Hermitian mirror.
      for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) {
          re(j + dj, i + di) = re(i + di, j + dj);
          im(j + dj, i + di) = -im(i + di, j + dj);
        }
      }
    }
  }
}

// Collapses groups of `multiplicity` numerically identical eigenvalues.
std::vector<double> deduplicate(const std::vector<double>& vals, int multiplicity,
                                std::uint64_t seed, std::uint64_t stream) {
  const std::size_t count = vals.size() / multiplicity;
  double scale = 1.0;
  for (double v : vals) scale = std::max(scale, std::fabs(v));
  std::vector<double> out(count);
  for (std::size_t g = 0; g < count; ++g) {
    const double lo = vals[g * multiplicity];
    const double hi = vals[g * multiplicity + multiplicity - 1];
    if (hi - lo > 1e-8 * scale) {
      throw NumericalError("sample_matrix: eigenvalue multiplet split beyond tolerance (seed " +
                           std::to_string(seed) + ", stream " + std::to_string(stream) + ")");
    }
    double mean = 0.0;
    for (int k = 0; k < multiplicity; ++k) mean += vals[g * multiplicity + k];
    out[g] = mean / multiplicity;
  }
  return out;
}

}  // namespace

Spectrum sample_matrix(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t stream) {
  check_spec(spec);
  StreamRng rng(seed, stream);
  Spectrum sp;
  sp.spec = spec;
  sp.seed = seed;
  sp.stream = stream;
  try {
    if (spec.beta == 1) {
      SquareMatrix m = sample_goe(spec.n, rng);
      sp.values = symmetric_eigenvalues(m);
    } else if (spec.beta == 2) {
      SquareMatrix re, im;
      sample_gue_parts(spec.n, rng, re, im);
      SquareMatrix s = embed_hermitian(re, im);
      sp.values = deduplicate(symmetric_eigenvalues(s), 2, seed, stream);
    } else {
      SquareMatrix re, im;
      sample_gse_parts(spec.n, rng, re, im);
      SquareMatrix s = embed_hermitian(re, im);
      // Kramers doubling times the embedding doubling: groups of four.
      sp.values = deduplicate(symmetric_eigenvalues(s), 4, seed, stream);
    }
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " [seed " + std::to_string(seed) + ", stream " +
                         std::to_string(stream) + "]");
  }
  return sp;
}

double semicircle_radius(const EnsembleSpec& spec) {
  check_spec(spec);
  // 2 sigma sqrt(dim), with sigma^2 the off-diagonal entry variance.
  if (spec.beta == 1) return std::sqrt(static_cast<double>(spec.n));
  return std::sqrt(2.0 * static_cast<double>(spec.n));
}

double semicircle_mass(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / M_PI;
}

UnfoldedPoints unfold_bulk(const Spectrum& sp, double center_fraction) {
  if (!(center_fraction > 0.0 && center_fraction <= 0.5)) {
    throw RangeError("unfold_bulk: center_fraction must lie in (0, 0.5]");
  }
  const std::size_t n = sp.values.size();
  const std::size_t count = static_cast<std::size_t>(std::llround(center_fraction * n));
  if (count < 20) {
    throw InsufficientDataError("unfold_bulk: window holds fewer than 20 eigenvalues");
  }
  UnfoldedPoints out;
  out.window_lo = (n - count) / 2;
  out.window_hi = out.window_lo + count;
  const double radius = semicircle_radius(sp.spec);
  out.values.reserve(count);
  for (std::size_t i = out.window_lo; i < out.window_hi; ++i) {
    out.values.push_back(static_cast<double>(n) * semicircle_mass(sp.values[i] / radius));
  }
  return out;
}

EdgeScaling edge_scaling(const EnsembleSpec& spec) {
  check_spec(spec);
  const double n = static_cast<double>(spec.n);
  if (spec.beta == 2) return {std::sqrt(2.0 * n), std::pow(n, -1.0 / 6.0) / std::sqrt(2.0)};
  if (spec.beta == 1) return {std::sqrt(n), 0.5 * std::pow(n, -1.0 / 6.0)};
  return {std::sqrt(2.0 * n), 0.5 * std::pow(2.0 * n, -1.0 / 6.0)};
}

double edge_statistic(const Spectrum& sp) {
  const EdgeScaling es = edge_scaling(sp.spec);
  return (sp.values.back() - es.center) / es.scale;
}

}  // namespace rmt
