#pragma once

#include <vector>

#include "hjlab/field.hpp"
#include "hjlab/params.hpp"

namespace hjlab {

// The one-parameter solution family depending only on the height x_N:
//   u_t(x_N) = int_0^{x_N} ((p-1) y + t)^{-1/(p-1)} dy
//            = [ ((p-1) x_N + t)^{(p-2)/(p-1)} - t^{(p-2)/(p-1)} ] / (p-2),
// which solves -u'' = |u'|^p exactly. Bounded for p < 2, increasing, zero
// at the boundary.
class ExplicitSolution {
 public:
  explicit ExplicitSolution(const Parameters& params);

  double value(double x_n) const;
  double slope(double x_n) const;   // u_t' = ((p-1) x_N + t)^{-alpha} > 0
  double second(double x_n) const;  // u_t'' = -((p-1) x_N + t)^{-alpha-1}
  double limit_at_infinity() const; // t^{(p-2)/(p-1)} / (2-p)

  const Parameters& params() const { return params_; }

 private:
  Parameters params_;
};

double u_t_eval(double x_n, const Parameters& params);

// Max over interior vertical nodes of |-D2 u_t - |D1 u_t|^p| with the grid
// stencils; decays at second order under refinement. With analytic
// derivatives the residual is pure rounding.
struct UtResidualReport {
  double max_residual_stencil = 0.0;
  double max_residual_analytic = 0.0;
};
UtResidualReport u_t_residual(const Grid& grid, const Parameters& params);

}  // namespace hjlab
