#pragma once

#include <functional>
#include <vector>

#include "hjlab/params.hpp"

namespace hjlab {

// A one-dimensional source on (0, infinity) with an algebraic decay
// envelope |rule(x)| <= tail_coefficient * x^{-tail_exponent} for
// x >= tail_start. tail_exponent > 1 is required for the improper integral
// to converge. When tail_integral is supplied it evaluates
// int_x^infty rule exactly (for x >= tail_start) and removes the
// truncation error entirely.
struct OneDimSource {
  std::function<double(double)> rule;
  double tail_coefficient = 0.0;
  double tail_exponent = 2.0;
  double tail_start = 1.0;
  std::function<double(double)> tail_integral;  // optional exact tail
};

// Solution of -H'' = h on (0, infinity) with H(0) = 0 and decaying slope:
//   H(x) = int_0^x tau h(tau) dtau + x int_x^infty h(tau) dtau,
// sampled at the given increasing nodes. Reports the one-dimensional
// X_psi / Y_psi sups and their ratio.
struct SupersolutionResult {
  std::vector<double> nodes;
  std::vector<double> source;
  std::vector<double> profile;
  double tail_error_bound = 0.0;
  double x_psi_norm = 0.0;
  double y_psi_norm = 0.0;
  double norm_ratio = 0.0;
};

SupersolutionResult one_dim_supersolution(const OneDimSource& source,
                                          const std::vector<double>& nodes,
                                          const Parameters& params);

// Built-in barrier data
//   h0(x) = chi_(0,2)(x) x^{-sigma-1} + chi_(1,inf)(x) x^{-(alpha+1-mu)}
// and its profile H0 in closed form. H0 dominates every truncated-domain
// solution with |h| below the unit Y_psi envelope.
double barrier_source_value(double x, const Parameters& params);
double barrier_profile_value(double x, const Parameters& params);
OneDimSource default_barrier_source(const Parameters& params);

}  // namespace hjlab
