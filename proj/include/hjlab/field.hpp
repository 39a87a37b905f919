#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hjlab/grid.hpp"

namespace hjlab {

using PointRule = std::function<double(const std::array<double, 3>&)>;

// One scalar value per grid node. Value-semantic; operations build new
// fields. dirichlet_zero marks fields whose boundary entries are pinned to
// zero (phi/psi type unknowns, as opposed to right-hand sides).
struct Field {
  GridPtr grid;
  std::vector<double> values;
  bool dirichlet_zero = false;

  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  std::size_t size() const { return values.size(); }
};

Field make_zero_field(GridPtr grid, bool dirichlet_zero = true);
Field make_field(GridPtr grid, const PointRule& rule,
                 bool dirichlet_zero = false);

// y + a*x on a shared grid.
Field add_scaled(const Field& y, double a, const Field& x);
Field subtract(const Field& a, const Field& b);
Field scale(const Field& f, double a);

double max_abs(const Field& f);
bool all_finite(const Field& f);

// Multilinear interpolation at an arbitrary point of the grid box.
double interpolate(const Field& f, const std::array<double, 3>& x);

void require_same_grid(const Field& a, const Field& b, const char* where);

}  // namespace hjlab
