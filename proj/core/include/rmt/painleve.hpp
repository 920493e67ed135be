#pragma once

#include <vector>

namespace rmt {

// Grid solution of u'' = 2u^3 + s u with Airy-function initial data at
// s_start, integrated backward.  Alongside u and u' the integrator carries
//   I(s) = int_s^inf u(t) dt
//   K(s) = int_s^inf u(t)^2 dt
//   J(s) = int_s^inf (t - s) u(t)^2 dt
// seeded at s_start from quadrature of the Airy tail.
struct PainleveSolution {
  std::vector<double> grid;       // descending, uniform step
  std::vector<double> u;
  std::vector<double> u_prime;
  std::vector<double> tail_integral_u;  // I
  std::vector<double> tail_integral_q;  // J
  std::vector<double> usq_integral;     // K, used for interpolation of J
  double s_start = 0.0;
  double s_end = 0.0;
  double step = 0.0;
  double tol = 0.0;

  bool covers(double s) const { return s >= s_end && s <= s_start; }

  // Cubic Hermite interpolation (derivatives are known exactly on the grid).
  double u_at(double s) const;
  double i_at(double s) const;
  double j_at(double s) const;
};

// Adaptive embedded Runge-Kutta 5(4), backward from s_start.  Preconditions:
// s_start >= 6, s_end >= -10 (backward integration of this solution is
// unstable past there in double precision), s_end < s_start, tol >= 1e-12.
// Throws InstabilityError if |u| exceeds 1e6 before reaching s_end.
PainleveSolution solve_painleve_ii(double s_start = 8.0, double s_end = -10.0, double tol = 1e-10);

// Largest residual |d(u')/ds - (2u^3 + s u)| over interior grid points,
// with d(u')/ds formed by a fourth-order finite-difference stencil on the
// stored derivative values.  An independent consistency check that the
// returned (u, u') pair actually solves the equation.
double max_ode_residual(const PainleveSolution& sol);

// Shared default solution (s_start 8, s_end -10, tol 1e-10), computed once.
const PainleveSolution& default_painleve_solution();

}  // namespace rmt
