#include "hjlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hjlab {

namespace {

std::vector<double> uniform_axis(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

// Geometric nodes from a to b (exclusive of a, inclusive of b) appended to
// out, with `cells` cells.
void append_geometric(std::vector<double>& out, double a, double b,
                      int cells) {
  const double q = std::pow(b / a, 1.0 / cells);
  for (int k = 1; k < cells; ++k) {
    out.push_back(a * std::pow(q, k));
  }
  out.push_back(b);
}

}  // namespace

std::vector<double> graded_vertical_nodes(double eps, double r_out,
                                          double sigma, int refine_level) {
  if (!(eps > 0.0) || !(r_out > eps)) {
    throw std::invalid_argument("graded_vertical_nodes: need 0 < eps < r_out");
  }
  if (refine_level < 0 || refine_level > 12) {
    throw std::invalid_argument("graded_vertical_nodes: bad refine_level");
  }
  // Ratio cap: (x_{k+1}/x_k)^{sigma+1} <= 1.05.
  const double rho_max = std::pow(1.05, 1.0 / (sigma + 1.0));
  std::vector<double> breaks = {eps};
  if (eps < 1.0 && r_out > 1.0) breaks.push_back(1.0);
  if (eps < 2.0 && r_out > 2.0) breaks.push_back(2.0);
  breaks.push_back(r_out);

  std::vector<double> nodes = {eps};
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double a = breaks[s];
    const double b = breaks[s + 1];
    int cells = static_cast<int>(std::ceil(std::log(b / a) / std::log(rho_max)));
    cells = std::max(cells, 2) << refine_level;
    append_geometric(nodes, a, b, cells);
  }
  return nodes;
}

Grid::Grid(int dimension, double r_out, double eps,
           std::vector<double> vertical, int transverse_nodes)
    : dimension_(dimension), r_out_(r_out), eps_(eps) {
  if (dimension < 1 || dimension > kMaxDim) {
    throw std::invalid_argument("Grid: dimension must be 1, 2 or 3");
  }
  if (vertical.size() < 5) {
    throw std::invalid_argument("Grid: need at least 5 vertical nodes");
  }
  for (std::size_t j = 0; j + 1 < vertical.size(); ++j) {
    if (!(vertical[j] < vertical[j + 1])) {
      throw std::invalid_argument("Grid: vertical nodes must increase");
    }
  }
  if (std::abs(vertical.front() - eps) > 1e-14 * std::max(1.0, eps)) {
    throw std::invalid_argument("Grid: vertical axis must start at eps");
  }
  int below = 0, above = 0;
  for (double x : vertical) {
    if (x <= 1.0) ++below;
    if (x >= 1.0) ++above;
  }
  if (below < 3 || above < 3) {
    throw std::invalid_argument(
        "Grid: need at least 3 vertical nodes in (0,1] and 3 in [1,R]");
  }
  if (dimension > 1 && transverse_nodes < 3) {
    throw std::invalid_argument("Grid: need at least 3 transverse nodes");
  }

  for (int a = 0; a < dimension - 1; ++a) {
    axes_[a] = uniform_axis(-r_out, r_out, transverse_nodes);
  }
  axes_[dimension - 1] = std::move(vertical);

  node_count_ = 1;
  for (int a = 0; a < dimension; ++a) node_count_ *= axes_[a].size();

  const auto& vert = axes_[dimension - 1];
  split_index_ = 0;
  double best = std::abs(vert[0] - 1.0);
  for (std::size_t j = 1; j < vert.size(); ++j) {
    const double d = std::abs(vert[j] - 1.0);
    if (d < best) {
      best = d;
      split_index_ = static_cast<int>(j);
    }
  }
}

std::size_t Grid::flat_index(const std::array<int, kMaxDim>& idx) const {
  std::size_t f = 0;
  for (int a = 0; a < dimension_; ++a) {
    f = f * axes_[a].size() + static_cast<std::size_t>(idx[a]);
  }
  return f;
}

std::array<int, Grid::kMaxDim> Grid::multi_index(std::size_t flat) const {
  std::array<int, kMaxDim> idx{0, 0, 0};
  for (int a = dimension_ - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % axes_[a].size());
    flat /= axes_[a].size();
  }
  return idx;
}

std::array<double, Grid::kMaxDim> Grid::point(std::size_t flat) const {
  const auto idx = multi_index(flat);
  std::array<double, kMaxDim> x{0.0, 0.0, 0.0};
  for (int a = 0; a < dimension_; ++a) x[a] = axes_[a][idx[a]];
  return x;
}

bool Grid::is_boundary(std::size_t flat) const {
  const auto idx = multi_index(flat);
  for (int a = 0; a < dimension_; ++a) {
    if (idx[a] == 0 || idx[a] + 1 == extent(a)) return true;
  }
  return false;
}

double Grid::node_volume(std::size_t flat) const {
  const auto idx = multi_index(flat);
  double vol = 1.0;
  for (int a = 0; a < dimension_; ++a) {
    const auto& ax = axes_[a];
    const int i = idx[a];
    double left = (i > 0) ? ax[i] - ax[i - 1] : 0.0;
    double right = (i + 1 < extent(a)) ? ax[i + 1] - ax[i] : 0.0;
    vol *= 0.5 * (left + right);
  }
  return vol;
}

std::string Grid::id() const {
  std::ostringstream os;
  os << "N" << dimension_ << "_R" << r_out_ << "_eps" << eps_ << "_nv"
     << vertical_extent();
  if (dimension_ > 1) os << "_nt" << extent(0);
  return os.str();
}

GridPtr make_grid(int dimension, double r_out, double eps,
                  std::vector<double> vertical, int transverse_nodes) {
  return std::make_shared<Grid>(dimension, r_out, eps, std::move(vertical),
                                transverse_nodes);
}

GridPtr make_truncated_grid(int dimension, double r_out, double eps,
                            double sigma, int transverse_nodes,
                            int refine_level) {
  return make_grid(dimension, r_out, eps,
                   graded_vertical_nodes(eps, r_out, sigma, refine_level),
                   transverse_nodes);
}

GridPtr make_exhaustion_grid(int dimension, double r_out, double sigma,
                             int transverse_nodes, int refine_level) {
  return make_truncated_grid(dimension, r_out, 1.0 / r_out, sigma,
                             transverse_nodes, refine_level);
}

}  // namespace hjlab
