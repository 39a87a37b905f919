#pragma once

#include <cstddef>
#include <string>

#include "hjlab/field.hpp"
#include "hjlab/params.hpp"
#include "hjlab/stencil.hpp"

namespace hjlab {

// The five weighted sup norms (plus the hat variant of X). All are discrete
// sups over grid nodes, split into an inner part (x_N <= 1) and an outer
// part (x_N >= 1); the node nearest 1 counts toward both. The total is the
// max of the two parts.
//
//   X       : x^sigma |grad phi|            /  x^alpha |grad phi|
//   Y       : x^{sigma+1} |f|               /  x^{alpha+1} |f|
//   Xhat    : X tiers + x^{sigma+1}|lap|    /  + x^{alpha+1}|lap|
//   Xpsi    : x^{sigma-1} |psi|             /  x^{alpha-1-mu} |psi|
//   Ypsi    : x^{sigma+1} |h|               /  x^{alpha+1-mu} |h|
//   XpsiHat : Xpsi tiers + x^sigma|grad| + x^{sigma+1}|lap|
//             /  + x^{alpha-mu}|grad| + x^{alpha+1-mu}|lap|
enum class NormKind { X, Y, Xhat, Xpsi, Ypsi, XpsiHat };

const char* norm_kind_name(NormKind kind);

struct WeightedNormReport {
  NormKind kind = NormKind::Y;
  double inner = 0.0;
  double outer = 0.0;
  double total = 0.0;
  std::size_t inner_argmax = 0;
  std::size_t outer_argmax = 0;
  std::array<double, 3> inner_point{0, 0, 0};
  std::array<double, 3> outer_point{0, 0, 0};
};

bool norm_needs_derivatives(NormKind kind);

// Discrete-stencil version; derivative tiers use the grid stencils.
WeightedNormReport weighted_norm(const Field& f, const Parameters& params,
                                 NormKind kind);

// Oracle version: derivative tiers read from the supplied set (which may be
// analytic). Value tiers always read the field itself.
WeightedNormReport weighted_norm(const Field& f, const Parameters& params,
                                 NormKind kind, const DerivativeSet& derivs);

// Same sup restricted to nodes inside the closed box [lo, hi] (component
// ranges beyond the grid are clipped). Used for restriction properties and
// core-window studies.
WeightedNormReport weighted_norm_window(const Field& f,
                                        const Parameters& params,
                                        NormKind kind,
                                        const DerivativeSet& derivs,
                                        const std::array<double, 3>& lo,
                                        const std::array<double, 3>& hi);

// Flat key/value record.
std::string to_key_value(const WeightedNormReport& report);

}  // namespace hjlab
