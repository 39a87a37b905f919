#pragma once

namespace hjlab {

// Derived constant pack for the gradient exponent p. Everything except
// sigma, t and lambda is forced by p:
//   alpha = 1/(p-1), gamma = p/(p-1), mu = gamma/2.
// The admissible window 4/3 < p < 2 is exactly the window on which
// mu + 1 - alpha lies in (0,1).
struct Parameters {
  double p = 1.5;
  double alpha = 2.0;
  double gamma = 3.0;
  double mu = 1.5;
  double sigma = 0.01;  // boundary weight exponent, > 0 small
  double t = 1.0;       // shift of the solution family
  double lambda = 1.0;  // perturbation dilation

  // mu + 1 - alpha, the exponent that the admissibility window controls.
  double window_exponent() const { return mu + 1.0 - alpha; }
};

// Builds the pack from (p, sigma, t, lambda) and validates every invariant.
// Throws std::invalid_argument with a diagnostic naming the violated
// invariant.
Parameters derive_parameters(double p, double sigma = 0.01, double t = 1.0,
                             double lambda = 1.0);

}  // namespace hjlab
