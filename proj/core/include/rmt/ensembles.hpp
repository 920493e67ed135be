#pragma once

#include <cstdint>
#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

// Gaussian invariant ensemble with matrix density ~ exp(-tr M^2).
// beta = 1: N x N real symmetric (GOE)
// beta = 2: N x N complex Hermitian (GUE), diagonalized through the
//           real-symmetric embedding [[A, -B], [B, A]]
// beta = 4: 2N x 2N Hermitian self-dual built from quaternion blocks (GSE),
//           embedded the same way; the N distinct eigenvalues are returned.
struct EnsembleSpec {
  int beta = 2;
  int n = 2;
};

struct Spectrum {
  std::vector<double> values;  // ascending, N entries
  EnsembleSpec spec;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Draws one matrix and returns its spectrum.  All randomness comes from
// StreamRng(seed, stream), so every draw is reproducible in isolation.
Spectrum sample_matrix(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t stream);

// Semicircle support radius implied by exp(-tr M^2) for each beta.
double semicircle_radius(const EnsembleSpec& spec);

// Mass of the semicircle law on [-1, x] (unit radius).
double semicircle_mass(double x);

struct UnfoldedPoints {
  std::vector<double> values;     // rescaled eigenvalues, ascending
  std::size_t window_lo = 0;      // index range of the spectrum that was kept
  std::size_t window_hi = 0;
};

// Rescales the central `center_fraction` of the spectrum to unit mean
// density using the semicircle counting function.  Throws
// InsufficientDataError when the window holds fewer than 20 eigenvalues.
UnfoldedPoints unfold_bulk(const Spectrum& sp, double center_fraction);

struct EdgeScaling {
  double center;  // z_N
  double scale;   // s_N
};

// Centering/scale constants for the largest eigenvalue.  beta = 2 uses
// z = sqrt(2N), s = 2^{-1/2} N^{-1/6}; beta = 1 and 4 use the analogous
// Wigner soft-edge constants for this entry-variance convention (tests
// compare those ensembles after empirical standardization).
EdgeScaling edge_scaling(const EnsembleSpec& spec);

// (lambda_max - z_N) / s_N.
double edge_statistic(const Spectrum& sp);

}  // namespace rmt
