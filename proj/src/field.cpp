#include "hjlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hjlab {

Field make_zero_field(GridPtr grid, bool dirichlet_zero) {
  Field f;
  f.grid = std::move(grid);
  f.values.assign(f.grid->node_count(), 0.0);
  f.dirichlet_zero = dirichlet_zero;
  return f;
}

Field make_field(GridPtr grid, const PointRule& rule, bool dirichlet_zero) {
  Field f;
  f.grid = std::move(grid);
  f.values.resize(f.grid->node_count());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    f.values[i] = rule(f.grid->point(i));
  }
  f.dirichlet_zero = dirichlet_zero;
  if (dirichlet_zero) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      if (f.grid->is_boundary(i)) f.values[i] = 0.0;
    }
  }
  return f;
}

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (a.grid.get() != b.grid.get()) {
    throw std::invalid_argument(std::string(where) +
                                ": fields live on different grids");
  }
}

Field add_scaled(const Field& y, double a, const Field& x) {
  require_same_grid(y, x, "add_scaled");
  Field out = y;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] += a * x.values[i];
  }
  out.dirichlet_zero = y.dirichlet_zero && x.dirichlet_zero;
  return out;
}

Field subtract(const Field& a, const Field& b) { return add_scaled(a, -1.0, b); }

Field scale(const Field& f, double a) {
  Field out = f;
  for (double& v : out.values) v *= a;
  return out;
}

double max_abs(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const Field& f) {
  return std::all_of(f.values.begin(), f.values.end(),
                     [](double v) { return std::isfinite(v); });
}

double interpolate(const Field& f, const std::array<double, 3>& x) {
  const Grid& g = *f.grid;
  const int dim = g.dimension();
  std::array<int, 3> lo{0, 0, 0};
  std::array<double, 3> w{0.0, 0.0, 0.0};
  for (int a = 0; a < dim; ++a) {
    const auto& ax = g.axis(a);
    if (x[a] < ax.front() || x[a] > ax.back()) {
      throw std::invalid_argument("interpolate: point outside grid box");
    }
    auto it = std::upper_bound(ax.begin(), ax.end(), x[a]);
    int hi = static_cast<int>(it - ax.begin());
    hi = std::clamp(hi, 1, static_cast<int>(ax.size()) - 1);
    lo[a] = hi - 1;
    w[a] = (x[a] - ax[lo[a]]) / (ax[hi] - ax[lo[a]]);
  }
  double sum = 0.0;
  const int corners = 1 << dim;
  for (int c = 0; c < corners; ++c) {
    std::array<int, 3> idx{0, 0, 0};
    double weight = 1.0;
    for (int a = 0; a < dim; ++a) {
      const int bit = (c >> a) & 1;
      idx[a] = lo[a] + bit;
      weight *= bit ? w[a] : (1.0 - w[a]);
    }
    if (weight != 0.0) sum += weight * f.values[g.flat_index(idx)];
  }
  return sum;
}

}  // namespace hjlab
