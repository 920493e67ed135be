#pragma once

#include <cstddef>
#include <vector>

namespace rmt {

// Dense row-major square matrix, just enough surface for the solvers here.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// Householder reduction of a symmetric matrix to tridiagonal form
// (eigenvalues only; transformation vectors are not accumulated).
// On return d holds the diagonal and e the subdiagonal (e[0] unused).
// The input matrix is destroyed.
void tridiagonalize(SquareMatrix& a, std::vector<double>& d, std::vector<double>& e);

// Implicit QL with Wilkinson shifts on a tridiagonal matrix; d/e as produced
// by tridiagonalize.  Throws NumericalError when an eigenvalue fails to
// converge within the iteration cap.  d holds the eigenvalues on return
// (unsorted).
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e);

// Eigenvalues of a symmetric matrix, ascending.  Destroys the input.
std::vector<double> symmetric_eigenvalues(SquareMatrix& a);

// Determinant via LU with partial pivoting.  Destroys the input.
double lu_determinant(SquareMatrix& a);

}  // namespace rmt
