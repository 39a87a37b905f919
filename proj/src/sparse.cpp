#include "hjlab/sparse.hpp"

#include <cmath>
#include <stdexcept>

namespace hjlab {

void CsrMatrix::matvec(const std::vector<double>& x,
                       std::vector<double>& y) const {
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      sum += vals[k] * x[cols[k]];
    }
    y[i] = sum;
  }
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      if (cols[k] == i) d[i] += vals[k];
    }
  }
  return d;
}

CsrBuilder::CsrBuilder(int n) {
  m_.n = n;
  m_.row_ptr.assign(1, 0);
}

void CsrBuilder::begin_row(int row) {
  if (row != current_row_ + 1) {
    throw std::logic_error("CsrBuilder: rows must be appended in order");
  }
  current_row_ = row;
}

void CsrBuilder::add(int col, double value) {
  m_.cols.push_back(col);
  m_.vals.push_back(value);
}

CsrMatrix CsrBuilder::finish() {
  while (static_cast<int>(m_.row_ptr.size()) <= current_row_ + 1) {
    m_.row_ptr.push_back(static_cast<int>(m_.cols.size()));
  }
  if (current_row_ + 1 != m_.n) {
    throw std::logic_error("CsrBuilder: not all rows were filled");
  }
  return std::move(m_);
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

KrylovResult pcg(const CsrMatrix& a, const std::vector<double>& b,
                 std::vector<double>& x, double tol, int max_iterations) {
  const int n = a.n;
  if (x.empty()) x.assign(n, 0.0);
  std::vector<double> inv_diag = a.diagonal();
  for (double& d : inv_diag) d = (d != 0.0) ? 1.0 / d : 1.0;

  std::vector<double> r(n), z(n), p(n), ap(n);
  a.matvec(x, ap);
  for (int i = 0; i < n; ++i) r[i] = b[i] - ap[i];

  KrylovResult res;
  res.rhs_norm = norm2(b);
  const double r0 = norm2(r);
  const double target = tol * std::max(res.rhs_norm, r0);

  for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
  p = z;
  double rz = dot(r, z);
  double rnorm = r0;

  for (int it = 0; it < max_iterations; ++it) {
    if (rnorm <= target || rnorm == 0.0) break;
    a.matvec(p, ap);
    const double pap = dot(p, ap);
    if (pap <= 0.0) break;  // lost positive definiteness (rounding floor)
    const double alpha = rz / pap;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    rnorm = norm2(r);
    res.iterations = it + 1;
  }
  res.residual = rnorm;
  res.converged = rnorm <= target;
  return res;
}

KrylovResult bicgstab(const CsrMatrix& a, const std::vector<double>& b,
                      std::vector<double>& x, double tol,
                      int max_iterations) {
  const int n = a.n;
  if (x.empty()) x.assign(n, 0.0);
  std::vector<double> inv_diag = a.diagonal();
  for (double& d : inv_diag) d = (d != 0.0) ? 1.0 / d : 1.0;

  std::vector<double> r(n), r0(n), p(n, 0.0), v(n, 0.0), s(n), t(n), y(n),
      z(n);
  a.matvec(x, v);
  for (int i = 0; i < n; ++i) r[i] = b[i] - v[i];
  r0 = r;
  std::fill(v.begin(), v.end(), 0.0);

  KrylovResult res;
  res.rhs_norm = norm2(b);
  const double target = tol * std::max(res.rhs_norm, norm2(r));

  double rho = 1.0, alpha = 1.0, omega = 1.0;
  double rnorm = norm2(r);
  for (int it = 0; it < max_iterations; ++it) {
    if (rnorm <= target || rnorm == 0.0) break;
    const double rho_new = dot(r0, r);
    if (rho_new == 0.0) break;
    const double beta = (rho_new / rho) * (alpha / omega);
    rho = rho_new;
    for (int i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
    for (int i = 0; i < n; ++i) y[i] = inv_diag[i] * p[i];
    a.matvec(y, v);
    alpha = rho / dot(r0, v);
    for (int i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
    if (norm2(s) <= target) {
      for (int i = 0; i < n; ++i) x[i] += alpha * y[i];
      rnorm = norm2(s);
      res.iterations = it + 1;
      break;
    }
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * s[i];
    a.matvec(z, t);
    const double tt = dot(t, t);
    if (tt == 0.0) break;
    omega = dot(t, s) / tt;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * y[i] + omega * z[i];
      r[i] = s[i] - omega * t[i];
    }
    if (omega == 0.0) break;
    rnorm = norm2(r);
    res.iterations = it + 1;
  }
  res.residual = rnorm;
  res.converged = rnorm <= target;
  return res;
}

std::vector<double> solve_tridiagonal(std::vector<double> lower,
                                      std::vector<double> diag,
                                      std::vector<double> upper,
                                      std::vector<double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n) {
    throw std::invalid_argument("solve_tridiagonal: size mismatch");
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i - 1] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) {
    x[i - 1] = (rhs[i - 1] - upper[i - 1] * x[i]) / diag[i - 1];
  }
  return x;
}

}  // namespace hjlab
