#include "hjlab/solve.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hjlab/conjugation.hpp"

namespace hjlab {

namespace {

int default_max_iterations(std::size_t unknowns) {
  return static_cast<int>(std::max<std::size_t>(10000, 20 * unknowns));
}

CsrMatrix scaled_matrix(const LinearSystem& sys) {
  CsrMatrix m = sys.matrix;
  for (int row = 0; row < m.n; ++row) {
    const double v = sys.row_volume[static_cast<std::size_t>(row)];
    for (int k = m.row_ptr[row]; k < m.row_ptr[row + 1]; ++k) {
      m.vals[k] *= v;
    }
  }
  return m;
}

std::vector<double> scaled_rhs(const LinearSystem& sys) {
  std::vector<double> b = sys.rhs.values;
  for (std::size_t i = 0; i < b.size(); ++i) b[i] *= sys.row_volume[i];
  return b;
}

// PCG on the volume-scaled SPD form of a symmetrizable system.
KrylovResult solve_spd(const LinearSystem& sys, const SolveOptions& opt,
                       Field& out) {
  const CsrMatrix a = scaled_matrix(sys);
  const std::vector<double> b = scaled_rhs(sys);
  std::vector<double> x(a.n, 0.0);
  const int max_it = opt.max_iterations > 0
                         ? opt.max_iterations
                         : default_max_iterations(sys.grid->node_count());
  const KrylovResult r = pcg(a, b, x, opt.tol, max_it);
  out = make_zero_field(sys.grid, true);
  out.values = std::move(x);
  return r;
}

double weighted_residual(const LinearSystem& sys, const Field& candidate,
                         NormKind kind) {
  const Field applied =
      apply_operator(sys.kind, sys.params, candidate, sys.tau);
  Field residual = subtract(applied, sys.rhs);
  // Dirichlet rows are identity rows; the equation residual is interior.
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (sys.grid->is_boundary(i)) residual.values[i] = 0.0;
  }
  return weighted_norm(residual, sys.params, kind).total;
}

}  // namespace

SolveReport solve_system(const LinearSystem& system,
                         const SolveOptions& options) {
  SolveReport rep;
  const bool drift_kind = !operator_is_symmetrizable(system.kind);
  const NormKind rhs_kind = drift_kind ? NormKind::Y : NormKind::Ypsi;
  const NormKind sol_kind = drift_kind ? NormKind::X : NormKind::XpsiHat;

  if (drift_kind && options.direct_nonsymmetric) {
    const int max_it = options.max_iterations > 0
                           ? options.max_iterations
                           : default_max_iterations(system.grid->node_count());
    std::vector<double> x(system.matrix.n, 0.0);
    const KrylovResult r =
        bicgstab(system.matrix, system.rhs.values, x, options.tol, max_it);
    rep.solution = make_zero_field(system.grid, true);
    rep.solution.values = std::move(x);
    rep.converged = r.converged;
    rep.iterations = r.iterations;
    rep.algebraic_residual = r.residual;
    rep.route = "bicgstab-direct";
  } else if (drift_kind) {
    // Conjugated route. W~_t(phi) = f is -L_s(phi) = f with s = t/(p-1);
    // L_s(phi) = f~ then becomes L^s(psi) = -(x_N+s)^mu f~.
    Parameters shifted = system.params;
    double rhs_sign = 1.0;
    if (system.kind == OperatorKind::WtTilde) {
      shifted.t = system.params.t / (system.params.p - 1.0);
      rhs_sign = -1.0;
    }
    Field h = system.rhs;
    const Grid& g = *system.grid;
    for (std::size_t i = 0; i < h.size(); ++i) {
      h.values[i] *= -rhs_sign *
                     std::pow(g.vertical_coord(i) + shifted.t, shifted.mu);
    }
    const LinearSystem conj =
        assemble(OperatorKind::SchrodingerLt, shifted, system.grid, h);
    Field psi;
    const KrylovResult r = solve_spd(conj, options, psi);
    rep.conjugated = psi;
    rep.solution = psi_to_phi(psi, shifted);
    rep.solution.dirichlet_zero = true;
    rep.converged = r.converged;
    rep.iterations = r.iterations;
    rep.algebraic_residual = r.residual;
    rep.route = "pcg-conjugated";
  } else {
    Field psi;
    const KrylovResult r = solve_spd(system, options, psi);
    rep.solution = psi;
    rep.converged = r.converged;
    rep.iterations = r.iterations;
    rep.algebraic_residual = r.residual;
    rep.route = "pcg";
  }

  if (!rep.converged) {
    std::ostringstream msg;
    msg << "solve_system: " << rep.route << " did not converge for "
        << operator_kind_name(system.kind) << " (residual "
        << rep.algebraic_residual << " after " << rep.iterations
        << " iterations)";
    throw std::runtime_error(msg.str());
  }

  rep.pde_residual = weighted_residual(system, rep.solution, rhs_kind);
  rep.solution_norm = weighted_norm(rep.solution, system.params, sol_kind);
  rep.rhs_norm = weighted_norm(system.rhs, system.params, rhs_kind).total;
  if (rep.rhs_norm > 0.0) {
    rep.stability_ratio = rep.solution_norm.total / rep.rhs_norm;
    rep.ratio_defined = true;
  }
  return rep;
}

std::string to_key_value(const SolveReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "route=" << report.route << "\n"
     << "converged=" << (report.converged ? 1 : 0) << "\n"
     << "iterations=" << report.iterations << "\n"
     << "algebraic_residual=" << report.algebraic_residual << "\n"
     << "pde_residual=" << report.pde_residual << "\n"
     << "solution_norm=" << report.solution_norm.total << "\n"
     << "rhs_norm=" << report.rhs_norm << "\n";
  os << "stability_ratio=";
  if (report.ratio_defined) {
    os << report.stability_ratio;
  } else {
    os << "n/a";
  }
  os << "\n";
  return os.str();
}

}  // namespace hjlab
