#pragma once

#include <string>
#include <vector>

#include "hjlab/params.hpp"

namespace hjlab {

// Indicial roots of beta(beta-1) = tau mu(mu-1), the equidimensional ODE
// obtained from the continuation family:
//   beta_pm(tau) = 1/2 +- sqrt(1 + 4 tau mu^2 - 4 tau mu)/2.
// beta_+ + beta_- = 1; beta_pm(0) = (1, 0); beta_pm(1) = (mu, 1-mu).
struct EulerExponents {
  double tau = 0.0;
  double beta_plus = 1.0;
  double beta_minus = 0.0;
};

EulerExponents euler_exponents(double tau, const Parameters& params);

// Numerical check, over a tau grid, of the ordering facts the kernel
// analysis rests on:
//   beta_+ strictly increasing,
//   alpha - 1 - mu + beta_+(tau) > 0,
//   beta_+(tau) > mu + 1 - alpha > beta_-(tau) for tau > 0.
struct ExponentOrderingReport {
  bool ok = true;
  std::string first_violation;  // empty when ok
  double min_increase_gap = 0.0;
  double min_growth_margin = 0.0;   // alpha - 1 - mu + beta_+
  double min_upper_margin = 0.0;    // beta_+ - (mu + 1 - alpha), tau > 0
  double min_lower_margin = 0.0;    // (mu + 1 - alpha) - beta_-, tau > 0
};

ExponentOrderingReport exponent_ordering_report(
    const Parameters& params, const std::vector<double>& taus);

}  // namespace hjlab
