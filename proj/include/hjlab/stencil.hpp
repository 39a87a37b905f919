#pragma once

#include <array>

#include "hjlab/field.hpp"

namespace hjlab {

// Second-order finite differences on the (possibly nonuniform) grid axes:
// central 3-point stencils in the interior, one-sided 3-point at faces for
// first derivatives. The Laplacian is evaluated at interior nodes only;
// boundary entries are left at zero.
Field derivative_axis(const Field& f, int axis);
Field laplacian(const Field& f);

// Gradient components plus Laplacian, bundled so norm evaluations can accept
// a precomputed (or analytically supplied) derivative oracle.
struct DerivativeSet {
  std::array<Field, 3> grad;
  Field lap;
  int dimension = 0;
};

DerivativeSet discrete_derivatives(const Field& f);

// 3-point first/second derivative weights for an interior node with left
// spacing hm and right spacing hp; exposed for the operator assembly.
struct StencilWeights {
  double left, center, right;
};
StencilWeights first_derivative_weights(double hm, double hp);
StencilWeights second_derivative_weights(double hm, double hp);

}  // namespace hjlab
