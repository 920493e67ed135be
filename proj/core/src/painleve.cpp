#include "rmt/painleve.hpp"

#include <array>
#include <cmath>
#include <string>

#include "rmt/airy.hpp"
#include "rmt/errors.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {
namespace {

using State = std::array<double, 5>;  // u, u', I, K, J

State derivative(double s, const State& y) {
  const double u = y[0];
  return {y[1], 2.0 * u * u * u + s * u, -u, -u * u, -y[3]};
}

// Dormand-Prince 5(4) coefficients.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kE[7] = {71.0 / 57600,  0.0,          -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

struct StepResult {
  State y;
  double err;  // scaled max-norm error estimate
};

StepResult rk45_step(double s, const State& y, double h, double tol) {
  State k[7];
  k[0] = derivative(s, y);
  for (int stage = 1; stage < 7; ++stage) {
    State ys;
    for (int c = 0; c < 5; ++c) {
      double acc = y[c];
      for (int j = 0; j < stage; ++j) acc += h * kA[stage][j] * k[j][c];
      ys[c] = acc;
    }
    k[stage] = derivative(s + kC[stage] * h, ys);
  }
  StepResult out;
  // FSAL: stage 7 coefficients equal the 5th-order solution weights.
  for (int c = 0; c < 5; ++c) {
    double acc = y[c];
    for (int j = 0; j < 6; ++j) acc += h * kA[6][j] * k[j][c];
    out.y[c] = acc;
  }
  // k[6] was evaluated at the new point via the loop above (stage 6).
  double err = 0.0;
  for (int c = 0; c < 5; ++c) {
    double e = 0.0;
    for (int j = 0; j < 7; ++j) e += kE[j] * k[j][c];
    e *= h;
    const double scale = tol + tol * std::max(std::fabs(y[c]), std::fabs(out.y[c]));
    err = std::max(err, std::fabs(e) / scale);
  }
  out.err = err;
  return out;
}

// Advances y from s to target (target < s) with adaptive sub-steps.
void integrate_to(double& s, State& y, double target, double tol, double& h_abs) {
  while (s > target) {
    double h = -std::min(h_abs, s - target);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 200) throw AccuracyError("solve_painleve_ii: step control failed");
      StepResult r = rk45_step(s, y, h, tol);
      if (r.err <= 1.0) {
        s += h;
        y = r.y;
        double grow = 0.9 * std::pow(std::max(r.err, 1e-10), -0.2);
        h_abs = std::fabs(h) * std::min(5.0, std::max(0.2, grow));
        break;
      }
      double shrink = std::max(0.2, 0.9 * std::pow(r.err, -0.2));
      h = h * shrink;
      if (std::fabs(h) < 1e-14) {
        throw AccuracyError("solve_painleve_ii: step size underflow near s = " +
                            std::to_string(s));
      }
    }
    if (std::fabs(y[0]) > 1e6) {
      throw InstabilityError("solve_painleve_ii: |u| blew up near s = " + std::to_string(s));
    }
    if (s - target < 1e-12) s = target;
  }
}

double hermite(double t, double h, double f0, double f1, double d0, double d1) {
  const double t2 = t * t, t3 = t2 * t;
  return (1.0 - 3.0 * t2 + 2.0 * t3) * f0 + (3.0 * t2 - 2.0 * t3) * f1 +
         h * ((t - 2.0 * t2 + t3) * d0 + (t3 - t2) * d1);
}

}  // namespace

double PainleveSolution::u_at(double s) const {
  if (!covers(s)) throw RangeError("PainleveSolution: s outside solution range");
  const double pos = (s_start - s) / step;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= grid.size() - 1) i = grid.size() - 2;
  const double h = grid[i + 1] - grid[i];
  const double t = (s - grid[i]) / h;
  return hermite(t, h, u[i], u[i + 1], u_prime[i], u_prime[i + 1]);
}

double PainleveSolution::i_at(double s) const {
  if (!covers(s)) throw RangeError("PainleveSolution: s outside solution range");
  const double pos = (s_start - s) / step;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= grid.size() - 1) i = grid.size() - 2;
  const double h = grid[i + 1] - grid[i];
  const double t = (s - grid[i]) / h;
  return hermite(t, h, tail_integral_u[i], tail_integral_u[i + 1], -u[i], -u[i + 1]);
}

double PainleveSolution::j_at(double s) const {
  if (!covers(s)) throw RangeError("PainleveSolution: s outside solution range");
  const double pos = (s_start - s) / step;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= grid.size() - 1) i = grid.size() - 2;
  const double h = grid[i + 1] - grid[i];
  const double t = (s - grid[i]) / h;
  return hermite(t, h, tail_integral_q[i], tail_integral_q[i + 1], -usq_integral[i],
                 -usq_integral[i + 1]);
}

PainleveSolution solve_painleve_ii(double s_start, double s_end, double tol) {
  if (s_start < 6.0) throw RangeError("solve_painleve_ii: s_start must be >= 6");
  if (s_end < -10.0) {
    throw RangeError("solve_painleve_ii: s_end below -10 is outside the trusted range");
  }
  if (s_end >= s_start) throw RangeError("solve_painleve_ii: need s_end < s_start");
  if (tol < 1e-12) throw RangeError("solve_painleve_ii: tol must be >= 1e-12");

  PainleveSolution sol;
  sol.s_start = s_start;
  sol.s_end = s_end;
  sol.tol = tol;
  sol.step = 0.005;
  const std::size_t n = static_cast<std::size_t>(std::ceil((s_start - s_end) / sol.step - 1e-9)) + 1;

  const AiryValue a0 = airy_unchecked(s_start);
  State y{a0.ai, a0.ai_prime, 0.0, 0.0, 0.0};
  {
    // Airy tail above s_start; the integrands are below 1e-26 past +16.
    auto ai = [](double t) { return airy_unchecked(t).ai; };
    auto ai2 = [](double t) { double v = airy_unchecked(t).ai; return v * v; };
    y[2] = integrate_panels(ai, s_start, s_start + 16.0, 8, 48);
    y[3] = integrate_panels(ai2, s_start, s_start + 16.0, 8, 48);
    y[4] = integrate_panels([&](double t) { return (t - s_start) * ai2(t); }, s_start,
                            s_start + 16.0, 8, 48);
  }

  sol.grid.reserve(n);
  sol.u.reserve(n);
  sol.u_prime.reserve(n);
  sol.tail_integral_u.reserve(n);
  sol.usq_integral.reserve(n);
  sol.tail_integral_q.reserve(n);

  auto push = [&](double s, const State& st) {
    sol.grid.push_back(s);
    sol.u.push_back(st[0]);
    sol.u_prime.push_back(st[1]);
    sol.tail_integral_u.push_back(st[2]);
    sol.usq_integral.push_back(st[3]);
    sol.tail_integral_q.push_back(st[4]);
  };

  double s = s_start;
  double h_abs = 0.01;
  push(s, y);
  for (std::size_t i = 1; i < n; ++i) {
    const double target = (i + 1 == n) ? s_end : s_start - sol.step * static_cast<double>(i);
    integrate_to(s, y, target, tol, h_abs);
    push(s, y);
  }
  return sol;
}

double max_ode_residual(const PainleveSolution& sol) {
  const std::size_t n = sol.grid.size();
  if (n < 5) throw InsufficientDataError("max_ode_residual: grid too small");
  double worst = 0.0;
  const double h = -sol.step;  // s decreases with index
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double dvds = (-sol.u_prime[i + 2] + 8.0 * sol.u_prime[i + 1] - 8.0 * sol.u_prime[i - 1] +
                         sol.u_prime[i - 2]) /
                        (12.0 * h);
    const double u = sol.u[i];
    const double rhs = 2.0 * u * u * u + sol.grid[i] * u;
    worst = std::max(worst, std::fabs(dvds - rhs));
  }
  return worst;
}

const PainleveSolution& default_painleve_solution() {
  static const PainleveSolution sol = solve_painleve_ii(8.0, -10.0, 1e-10);
  return sol;
}

}  // namespace rmt
