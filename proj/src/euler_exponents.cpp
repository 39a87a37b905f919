#include "hjlab/euler_exponents.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hjlab {

EulerExponents euler_exponents(double tau, const Parameters& params) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("euler_exponents: tau must lie in [0,1]");
  }
  const double mu = params.mu;
  const double disc = 1.0 + 4.0 * tau * mu * mu - 4.0 * tau * mu;
  const double root = std::sqrt(disc);
  return {tau, 0.5 + 0.5 * root, 0.5 - 0.5 * root};
}

ExponentOrderingReport exponent_ordering_report(
    const Parameters& params, const std::vector<double>& taus) {
  ExponentOrderingReport rep;
  rep.min_increase_gap = std::numeric_limits<double>::infinity();
  rep.min_growth_margin = std::numeric_limits<double>::infinity();
  rep.min_upper_margin = std::numeric_limits<double>::infinity();
  rep.min_lower_margin = std::numeric_limits<double>::infinity();

  const double m = params.window_exponent();
  double prev_beta_plus = -std::numeric_limits<double>::infinity();
  bool have_prev = false;

  auto violate = [&](const char* what, double tau) {
    if (rep.ok) {
      std::ostringstream os;
      os << what << " at tau=" << tau;
      rep.first_violation = os.str();
      rep.ok = false;
    }
  };

  for (double tau : taus) {
    const EulerExponents e = euler_exponents(tau, params);
    if (have_prev) {
      const double gap = e.beta_plus - prev_beta_plus;
      rep.min_increase_gap = std::min(rep.min_increase_gap, gap);
      if (!(gap > 0.0)) violate("beta_+ not strictly increasing", tau);
    }
    prev_beta_plus = e.beta_plus;
    have_prev = true;

    const double growth = params.alpha - 1.0 - params.mu + e.beta_plus;
    rep.min_growth_margin = std::min(rep.min_growth_margin, growth);
    if (!(growth > 0.0)) violate("alpha-1-mu+beta_+ <= 0", tau);

    if (tau > 0.0) {
      const double upper = e.beta_plus - m;
      const double lower = m - e.beta_minus;
      rep.min_upper_margin = std::min(rep.min_upper_margin, upper);
      rep.min_lower_margin = std::min(rep.min_lower_margin, lower);
      if (!(upper > 0.0)) violate("beta_+ <= mu+1-alpha", tau);
      if (!(lower > 0.0)) violate("beta_- >= mu+1-alpha", tau);
    }
  }
  return rep;
}

}  // namespace hjlab
