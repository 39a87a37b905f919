#pragma once

#include "hjlab/field.hpp"
#include "hjlab/params.hpp"

namespace hjlab {

// psi(x) = (x_N + t)^mu phi(x) and its inverse; the round trip is the
// identity up to rounding.
Field phi_to_psi(const Field& phi, const Parameters& params);
Field psi_to_phi(const Field& psi, const Parameters& params);

// Max over interior nodes and components of
//   | grad phi - [ grad psi / (x_N+t)^mu - mu e_N psi / (x_N+t)^{mu+1} ] |
// with phi = psi_to_phi(psi) and stencil gradients on both sides. Vanishes
// at stencil order for smooth psi.
double gradient_relation_check(const Field& psi, const Parameters& params);

}  // namespace hjlab
