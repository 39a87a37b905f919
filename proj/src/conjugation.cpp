#include "hjlab/conjugation.hpp"

#include <cmath>

#include "hjlab/stencil.hpp"

namespace hjlab {

namespace {

Field weight_multiply(const Field& f, double mu, double t, double sign) {
  Field out = f;
  const Grid& g = *f.grid;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] *= std::pow(g.vertical_coord(i) + t, sign * mu);
  }
  return out;
}

}  // namespace

Field phi_to_psi(const Field& phi, const Parameters& params) {
  return weight_multiply(phi, params.mu, params.t, +1.0);
}

Field psi_to_phi(const Field& psi, const Parameters& params) {
  return weight_multiply(psi, params.mu, params.t, -1.0);
}

double gradient_relation_check(const Field& psi, const Parameters& params) {
  const Grid& g = *psi.grid;
  const int dim = g.dimension();
  const Field phi = psi_to_phi(psi, params);
  const DerivativeSet dphi = discrete_derivatives(phi);
  const DerivativeSet dpsi = discrete_derivatives(psi);

  double worst = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (g.is_boundary(i)) continue;
    const double w = std::pow(g.vertical_coord(i) + params.t, params.mu);
    for (int a = 0; a < dim; ++a) {
      double expected = dpsi.grad[a].values[i] / w;
      if (a == dim - 1) {
        expected -= params.mu * psi.values[i] /
                    (w * (g.vertical_coord(i) + params.t));
      }
      worst = std::max(worst, std::abs(dphi.grad[a].values[i] - expected));
    }
  }
  return worst;
}

}  // namespace hjlab
