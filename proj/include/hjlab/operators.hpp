#pragma once

#include "hjlab/field.hpp"
#include "hjlab/params.hpp"
#include "hjlab/sparse.hpp"

namespace hjlab {

// The three discrete operators of the linear theory, on a truncated box
// with homogeneous Dirichlet data on every face:
//   DriftLt        : L_t(phi)   =  Lap phi + gamma phi_{x_N} / (x_N + t)
//   SchrodingerLt  : L^t(psi)   = -Lap psi + mu(mu-1) psi / (x_N + t)^2
//   ContinuationLt : L^t_tau    = -Lap psi + tau mu(mu-1) psi / (x_N + t)^2
// plus the linearization around the solution family,
//   WtTilde        : W~_t(phi)  = -Lap phi - p phi_{x_N} / ((p-1) x_N + t),
// which coincides with -L_{t/(p-1)} coefficient by coefficient.
enum class OperatorKind { DriftLt, SchrodingerLt, ContinuationLt, WtTilde };

const char* operator_kind_name(OperatorKind kind);
bool operator_is_symmetrizable(OperatorKind kind);

struct LinearSystem {
  OperatorKind kind = OperatorKind::SchrodingerLt;
  double tau = 1.0;  // only used by ContinuationLt
  Parameters params;
  GridPtr grid;
  CsrMatrix matrix;                 // collocation form
  std::vector<double> row_volume;   // symmetrizing row scale (1 on Dirichlet rows)
  Field rhs;
};

// Second-order central assembly. Dirichlet rows are identity rows with zero
// right-hand side. For the drift kinds the cell Peclet number
// gamma dx_N / (x_N + t) must stay below 2 (checked; guaranteed for t >= 1
// on the graded grids), and DriftLt additionally requires t >= 1.
LinearSystem assemble(OperatorKind kind, const Parameters& params,
                      GridPtr grid, const Field& rhs, double tau = 1.0);

// Collocation application of the operator stencil at interior nodes
// (boundary entries zero). Used for residuals and operator-identity checks.
Field apply_operator(OperatorKind kind, const Parameters& params,
                     const Field& f, double tau = 1.0);

}  // namespace hjlab
