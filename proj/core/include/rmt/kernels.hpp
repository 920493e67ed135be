#pragma once

#include <limits>
#include <vector>

#include "rmt/distribution.hpp"

namespace rmt {

enum class KernelKind { Sine, Airy };

// Integral operator restricted to (a, b).  For the Airy kind b may be
// +infinity; the semi-infinite interval is mapped onto a finite one inside
// the Nystrom discretization.
struct KernelOperator {
  KernelKind kind = KernelKind::Sine;
  double a = 0.0;
  double b = 0.0;
  int quadrature_order = 32;

  static KernelOperator sine(double a, double b, int order = 32) {
    return {KernelKind::Sine, a, b, order};
  }
  static KernelOperator airy_tail(double t, int order = 48) {
    return {KernelKind::Airy, t, std::numeric_limits<double>::infinity(), order};
  }
};

// Kernel entry K(x, y); near the diagonal the Airy kernel switches to the
// midpoint diagonal form to avoid cancellation.
double kernel_value(KernelKind kind, double x, double y);

// Nystrom determinant det(I - W^{1/2} K W^{1/2}) with Gauss-Legendre nodes.
// The quadrature order is doubled until the value moves by less than 1e-8;
// throws AccuracyError if that has not happened by order 512.
double fredholm_det(const KernelOperator& op);

// Eigenvalues of the discretized symmetric operator matrix at a fixed order
// (ascending).  Exposed for the spectrum-in-[0,1] property checks.
std::vector<double> kernel_spectrum(const KernelOperator& op, int order);

// Sine-kernel determinant on (-x, x): probability of no bulk eigenvalues in
// a scaled interval of half-width x.
double gap_probability(double x);

struct SpacingDensity {
  std::vector<double> grid;  // u values
  std::vector<double> p;     // density
};

// Gaudin nearest-neighbor spacing density p(u) = D''(u) with
// D(u) = det(1 - K_sine on (0, u)), by Richardson-extrapolated second
// differences in h.  Preconditions: u_max <= 5, h in [1e-3, 1e-2].
SpacingDensity spacing_density(double u_max = 5.0, double h = 5e-3, double grid_step = 0.01);

// Spacing CDF 1 + D'(u) as a table (label Spacing), for KS comparisons.
DistributionTable spacing_cdf(double u_max = 5.0, double h = 5e-3, double grid_step = 0.01);

// Bulk number variance of a scaled interval of length s.
double number_variance(double s);

// R(a, b) = int_a^b (1 - (sin(pi r)/(pi r))^2) dr by adaptive quadrature.
double pair_correlation_integral(double a, double b);

}  // namespace rmt
