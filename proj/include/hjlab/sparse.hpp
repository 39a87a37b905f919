#pragma once

#include <cstddef>
#include <vector>

namespace hjlab {

struct CsrMatrix {
  int n = 0;
  std::vector<int> row_ptr;
  std::vector<int> cols;
  std::vector<double> vals;

  void matvec(const std::vector<double>& x, std::vector<double>& y) const;
  std::vector<double> diagonal() const;
};

// Row-ordered triplet builder (rows must be appended in increasing order).
class CsrBuilder {
 public:
  explicit CsrBuilder(int n);
  void begin_row(int row);
  void add(int col, double value);
  CsrMatrix finish();

 private:
  CsrMatrix m_;
  int current_row_ = -1;
};

struct KrylovResult {
  int iterations = 0;
  double residual = 0.0;       // final |r|_2
  double rhs_norm = 0.0;       // |b|_2
  bool converged = false;
};

// Jacobi-preconditioned conjugate gradient; A must be symmetric positive
// definite. Stops when |r|_2 <= tol * max(|b|_2, |r_0|_2) or at stagnation
// near the rounding floor.
KrylovResult pcg(const CsrMatrix& a, const std::vector<double>& b,
                 std::vector<double>& x, double tol, int max_iterations);

// Jacobi-preconditioned BiCGStab for the nonsymmetric collocation systems.
KrylovResult bicgstab(const CsrMatrix& a, const std::vector<double>& b,
                      std::vector<double>& x, double tol, int max_iterations);

// In-place Thomas algorithm for tridiagonal systems: lower/diag/upper have
// sizes n-1 / n / n-1.
std::vector<double> solve_tridiagonal(std::vector<double> lower,
                                      std::vector<double> diag,
                                      std::vector<double> upper,
                                      std::vector<double> rhs);

}  // namespace hjlab
