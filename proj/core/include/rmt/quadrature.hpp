#pragma once

#include <functional>
#include <vector>

namespace rmt {

// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule of the given order (Newton iteration on the Legendre
// recurrence, accurate to ~1e-15 for order <= 1024).
const QuadratureRule& gauss_legendre(int order);

// Fixed-order Gauss-Legendre integral over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

// Composite Gauss-Legendre: [a, b] split into `panels` equal panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int order = 32);

// Adaptive Simpson with absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

}  // namespace rmt
