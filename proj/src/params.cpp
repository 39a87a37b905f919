#include "hjlab/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hjlab {

Parameters derive_parameters(double p, double sigma, double t, double lambda) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw std::invalid_argument("derive_parameters: p must be finite and > 1");
  }

  Parameters out;
  out.p = p;
  out.alpha = 1.0 / (p - 1.0);
  out.gamma = p / (p - 1.0);
  out.mu = 0.5 * out.gamma;
  out.sigma = sigma;
  out.t = t;
  out.lambda = lambda;

  const double m = out.window_exponent();
  if (!(m > 0.0 && m < 1.0)) {
    std::ostringstream msg;
    msg << "derive_parameters: mu + 1 - alpha = " << m
        << " is outside the open interval (0,1); p must lie in (4/3, 2)";
    throw std::invalid_argument(msg.str());
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("derive_parameters: sigma must be > 0");
  }
  // Contraction bookkeeping needs sigma + 1 - sigma(p-1) - sigma >= 0,
  // i.e. sigma <= 1/(p-1).
  if (1.0 - sigma * (p - 1.0) < 0.0) {
    throw std::invalid_argument(
        "derive_parameters: sigma violates 1 - sigma*(p-1) >= 0");
  }
  if (sigma >= 1.0) {
    throw std::invalid_argument("derive_parameters: sigma must be < 1");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("derive_parameters: t must be > 0");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("derive_parameters: lambda must be > 0");
  }
  return out;
}

}  // namespace hjlab
