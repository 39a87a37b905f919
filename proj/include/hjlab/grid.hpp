#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hjlab {

// Tensor-product grid over the truncated half-space box
//   [-R, R]^{N-1} x [eps, R],
// with the last axis ("vertical", x_N) graded geometrically toward eps and
// the transverse axes uniform. Node storage is row-major with the vertical
// index fastest.
class Grid {
 public:
  static constexpr int kMaxDim = 3;

  // dimension in 1..3; vertical must be strictly increasing, start at eps
  // and end at r_out. transverse_nodes is ignored for dimension == 1.
  Grid(int dimension, double r_out, double eps, std::vector<double> vertical,
       int transverse_nodes);

  int dimension() const { return dimension_; }
  double r_out() const { return r_out_; }
  double eps() const { return eps_; }

  const std::vector<double>& axis(int a) const { return axes_[a]; }
  const std::vector<double>& vertical_axis() const {
    return axes_[dimension_ - 1];
  }
  int extent(int a) const { return static_cast<int>(axes_[a].size()); }
  int vertical_extent() const { return extent(dimension_ - 1); }

  std::size_t node_count() const { return node_count_; }

  std::size_t flat_index(const std::array<int, kMaxDim>& idx) const;
  std::array<int, kMaxDim> multi_index(std::size_t flat) const;
  std::array<double, kMaxDim> point(std::size_t flat) const;

  int vertical_index(std::size_t flat) const {
    return static_cast<int>(flat % axes_[dimension_ - 1].size());
  }
  double vertical_coord(std::size_t flat) const {
    return axes_[dimension_ - 1][vertical_index(flat)];
  }

  // True when any axis index sits on a face of the box (Dirichlet nodes).
  bool is_boundary(std::size_t flat) const;

  // Index of the vertical node closest to 1; it belongs to both the inner
  // region x_N <= 1 and the outer region x_N >= 1 of the weighted norms.
  int split_index() const { return split_index_; }

  // Tensor cell volume around a node (half-cell at faces); used to
  // symmetrize assembled operators.
  double node_volume(std::size_t flat) const;

  std::string id() const;

 private:
  int dimension_;
  double r_out_;
  double eps_;
  std::array<std::vector<double>, kMaxDim> axes_;
  std::size_t node_count_ = 0;
  int split_index_ = 0;
};

using GridPtr = std::shared_ptr<const Grid>;

// Vertical node family on [eps, r_out]: piecewise geometric segments with
// breakpoints at 1 and 2 (so the built-in barrier kinks fall on nodes) and
// per-segment ratio capped so the x^{-sigma-1} weight varies at most 5% per
// cell. refine_level doubles every segment count, halving the ratio gap and
// keeping the stencils second order under refinement.
std::vector<double> graded_vertical_nodes(double eps, double r_out,
                                          double sigma, int refine_level = 0);

GridPtr make_grid(int dimension, double r_out, double eps,
                  std::vector<double> vertical, int transverse_nodes);

// Graded truncation with explicit eps.
GridPtr make_truncated_grid(int dimension, double r_out, double eps,
                            double sigma, int transverse_nodes,
                            int refine_level = 0);

// Exhaustion constructor: eps = 1/r_out.
GridPtr make_exhaustion_grid(int dimension, double r_out, double sigma,
                             int transverse_nodes, int refine_level = 0);

}  // namespace hjlab
