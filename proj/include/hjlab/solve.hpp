#pragma once

#include <string>

#include "hjlab/norms.hpp"
#include "hjlab/operators.hpp"

namespace hjlab {

struct SolveOptions {
  double tol = 1e-10;
  int max_iterations = 0;          // 0 = pick from problem size
  bool direct_nonsymmetric = false;  // cross-check mode: BiCGStab on L_t itself
};

struct SolveReport {
  Field solution;            // phi for the drift kinds, psi otherwise
  Field conjugated;          // the psi field solved internally (drift route)
  bool converged = false;
  int iterations = 0;
  double algebraic_residual = 0.0;
  double pde_residual = 0.0;       // Y (drift) / Y_psi (psi kinds) collocation residual
  WeightedNormReport solution_norm;  // X for drift kinds, XpsiHat otherwise
  double rhs_norm = 0.0;             // Y for drift kinds, Y_psi otherwise
  double stability_ratio = 0.0;      // solution_norm.total / rhs_norm; 0 when rhs = 0
  bool ratio_defined = false;
  std::string route;
};

// Solves the assembled system. The symmetrizable kinds run Jacobi-PCG on the
// volume-scaled (symmetric positive definite) form. The drift kinds are
// conjugated first: L_t(phi) = f becomes L^t(psi) = -(x_N+t)^mu f with
// psi = (x_N+t)^mu phi, solved by PCG and mapped back; W~_t goes through
// W~_t = -L_{t/(p-1)}. direct_nonsymmetric instead runs BiCGStab on the
// collocation matrix itself.
SolveReport solve_system(const LinearSystem& system,
                         const SolveOptions& options = {});

std::string to_key_value(const SolveReport& report);

}  // namespace hjlab
