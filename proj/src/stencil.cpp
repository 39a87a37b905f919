#include "hjlab/stencil.hpp"

#include <stdexcept>

namespace hjlab {

StencilWeights first_derivative_weights(double hm, double hp) {
  const double s = hm + hp;
  return {-hp / (hm * s), (hp - hm) / (hm * hp), hm / (hp * s)};
}

StencilWeights second_derivative_weights(double hm, double hp) {
  const double s = hm + hp;
  return {2.0 / (hm * s), -2.0 / (hm * hp), 2.0 / (hp * s)};
}

namespace {

// One-sided second-order first derivative at the first of three nodes with
// spacings h1 = x1-x0, h2 = x2-x1. Mirrored for the right end.
StencilWeights forward_weights(double h1, double h2) {
  const double s = h1 + h2;
  return {-(2.0 * h1 + h2) / (h1 * s), s / (h1 * h2), -h1 / (h2 * s)};
}

// Sweeps every grid line along `axis`, applying fn(line indices).
template <typename Fn>
void for_each_line(const Grid& g, int axis, Fn&& fn) {
  const int dim = g.dimension();
  std::array<int, 3> idx{0, 0, 0};
  // Iterate over all index combinations of the other axes.
  std::array<int, 3> outer{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    if (a != axis) outer[a] = g.extent(a);
  }
  for (int i0 = 0; i0 < outer[0]; ++i0) {
    for (int i1 = 0; i1 < outer[1]; ++i1) {
      for (int i2 = 0; i2 < outer[2]; ++i2) {
        idx = {i0, i1, i2};
        fn(idx);
      }
    }
  }
}

}  // namespace

Field derivative_axis(const Field& f, int axis) {
  const Grid& g = *f.grid;
  if (axis < 0 || axis >= g.dimension()) {
    throw std::invalid_argument("derivative_axis: bad axis");
  }
  const auto& ax = g.axis(axis);
  const int n = static_cast<int>(ax.size());
  Field out = make_zero_field(f.grid, false);

  for_each_line(g, axis, [&](std::array<int, 3> idx) {
    auto at = [&](int k) {
      idx[axis] = k;
      return g.flat_index(idx);
    };
    {
      const auto w = forward_weights(ax[1] - ax[0], ax[2] - ax[1]);
      out.values[at(0)] = w.left * f.values[at(0)] +
                          w.center * f.values[at(1)] +
                          w.right * f.values[at(2)];
    }
    for (int k = 1; k + 1 < n; ++k) {
      const auto w = first_derivative_weights(ax[k] - ax[k - 1], ax[k + 1] - ax[k]);
      out.values[at(k)] = w.left * f.values[at(k - 1)] +
                          w.center * f.values[at(k)] +
                          w.right * f.values[at(k + 1)];
    }
    {
      const auto w = forward_weights(ax[n - 1] - ax[n - 2], ax[n - 2] - ax[n - 3]);
      out.values[at(n - 1)] = -(w.left * f.values[at(n - 1)] +
                                w.center * f.values[at(n - 2)] +
                                w.right * f.values[at(n - 3)]);
    }
  });
  return out;
}

Field laplacian(const Field& f) {
  const Grid& g = *f.grid;
  Field out = make_zero_field(f.grid, false);
  for (int axis = 0; axis < g.dimension(); ++axis) {
    const auto& ax = g.axis(axis);
    const int n = static_cast<int>(ax.size());
    for_each_line(g, axis, [&](std::array<int, 3> idx) {
      auto at = [&](int k) {
        idx[axis] = k;
        return g.flat_index(idx);
      };
      for (int k = 1; k + 1 < n; ++k) {
        const auto w =
            second_derivative_weights(ax[k] - ax[k - 1], ax[k + 1] - ax[k]);
        out.values[at(k)] += w.left * f.values[at(k - 1)] +
                             w.center * f.values[at(k)] +
                             w.right * f.values[at(k + 1)];
      }
    });
  }
  // Keep only nodes interior along every axis.
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (g.is_boundary(i)) out.values[i] = 0.0;
  }
  return out;
}

DerivativeSet discrete_derivatives(const Field& f) {
  DerivativeSet d;
  d.dimension = f.grid->dimension();
  for (int a = 0; a < d.dimension; ++a) d.grad[a] = derivative_axis(f, a);
  d.lap = laplacian(f);
  return d;
}

}  // namespace hjlab
