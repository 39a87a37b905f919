#include "hjlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hjlab/stencil.hpp"

namespace hjlab {

const char* operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::DriftLt: return "L_t";
    case OperatorKind::SchrodingerLt: return "L^t";
    case OperatorKind::ContinuationLt: return "L^t_tau";
    case OperatorKind::WtTilde: return "W~_t";
  }
  return "?";
}

bool operator_is_symmetrizable(OperatorKind kind) {
  return kind == OperatorKind::SchrodingerLt ||
         kind == OperatorKind::ContinuationLt;
}

namespace {

struct Coefficients {
  double laplacian_sign;  // +1 for Lap, -1 for -Lap
  double drift;           // coefficient of phi_{x_N}
  double zero_order;      // coefficient of the field itself
};

Coefficients coefficients_at(OperatorKind kind, const Parameters& p,
                             double tau, double xn) {
  switch (kind) {
    case OperatorKind::DriftLt:
      return {+1.0, p.gamma / (xn + p.t), 0.0};
    case OperatorKind::SchrodingerLt:
      return {-1.0, 0.0, p.mu * (p.mu - 1.0) / ((xn + p.t) * (xn + p.t))};
    case OperatorKind::ContinuationLt:
      return {-1.0, 0.0,
              tau * p.mu * (p.mu - 1.0) / ((xn + p.t) * (xn + p.t))};
    case OperatorKind::WtTilde:
      return {-1.0, -p.p / ((p.p - 1.0) * xn + p.t), 0.0};
  }
  return {0.0, 0.0, 0.0};
}

void check_preconditions(OperatorKind kind, const Parameters& params,
                         const Grid& grid) {
  if (kind == OperatorKind::DriftLt && params.t < 1.0) {
    throw std::invalid_argument(
        "assemble: the drift theory requires t >= 1 for L_t");
  }
  if (kind == OperatorKind::DriftLt || kind == OperatorKind::WtTilde) {
    const auto& xs = grid.vertical_axis();
    for (std::size_t j = 1; j + 1 < xs.size(); ++j) {
      const double h = std::max(xs[j] - xs[j - 1], xs[j + 1] - xs[j]);
      const auto c = coefficients_at(kind, params, 0.0, xs[j]);
      const double peclet = std::abs(c.drift) * h;
      if (peclet >= 2.0) {
        std::ostringstream msg;
        msg << "assemble: cell Peclet number " << peclet << " >= 2 at x_N="
            << xs[j] << "; refine the vertical grid";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

}  // namespace

LinearSystem assemble(OperatorKind kind, const Parameters& params,
                      GridPtr grid, const Field& rhs, double tau) {
  if (rhs.grid.get() != grid.get()) {
    throw std::invalid_argument("assemble: rhs lives on a different grid");
  }
  if (!all_finite(rhs)) {
    throw std::invalid_argument("assemble: non-finite right-hand side");
  }
  if (kind == OperatorKind::ContinuationLt && !(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("assemble: tau must lie in [0,1]");
  }
  const Grid& g = *grid;
  check_preconditions(kind, params, g);

  LinearSystem sys;
  sys.kind = kind;
  sys.tau = tau;
  sys.params = params;
  sys.grid = grid;
  sys.rhs = rhs;
  sys.row_volume.assign(g.node_count(), 1.0);

  const int dim = g.dimension();
  const int n = static_cast<int>(g.node_count());
  CsrBuilder builder(n);

  for (int row = 0; row < n; ++row) {
    builder.begin_row(row);
    const std::size_t i = static_cast<std::size_t>(row);
    if (g.is_boundary(i)) {
      builder.add(row, 1.0);
      sys.rhs.values[i] = 0.0;
      continue;
    }
    const auto idx = g.multi_index(i);
    const double xn = g.vertical_coord(i);
    const auto c = coefficients_at(kind, params, tau, xn);
    sys.row_volume[i] = g.node_volume(i);

    double diag = c.zero_order;
    // Neighbor couplings, accumulated axis by axis; couplings into Dirichlet
    // nodes are dropped (their value is pinned to zero).
    struct Entry {
      int col;
      double val;
    };
    std::vector<Entry> entries;
    entries.reserve(2 * dim);
    for (int a = 0; a < dim; ++a) {
      const auto& ax = g.axis(a);
      const int k = idx[a];
      const double hm = ax[k] - ax[k - 1];
      const double hp = ax[k + 1] - ax[k];
      const auto w2 = second_derivative_weights(hm, hp);
      double left = c.laplacian_sign * w2.left;
      double center = c.laplacian_sign * w2.center;
      double right = c.laplacian_sign * w2.right;
      if (a == dim - 1 && c.drift != 0.0) {
        const auto w1 = first_derivative_weights(hm, hp);
        left += c.drift * w1.left;
        center += c.drift * w1.center;
        right += c.drift * w1.right;
      }
      diag += center;
      auto neighbor = [&](int step, double val) {
        auto nb = idx;
        nb[a] = k + step;
        const std::size_t flat = g.flat_index(nb);
        if (!g.is_boundary(flat)) {
          entries.push_back({static_cast<int>(flat), val});
        }
      };
      neighbor(-1, left);
      neighbor(+1, right);
    }
    entries.push_back({row, diag});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.col < y.col; });
    for (const auto& e : entries) builder.add(e.col, e.val);
  }
  sys.matrix = builder.finish();
  return sys;
}

Field apply_operator(OperatorKind kind, const Parameters& params,
                     const Field& f, double tau) {
  const Grid& g = *f.grid;
  Field out = make_zero_field(f.grid, false);
  const int dim = g.dimension();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.is_boundary(i)) continue;
    const auto idx = g.multi_index(i);
    const double xn = g.vertical_coord(i);
    const auto c = coefficients_at(kind, params, tau, xn);
    double acc = c.zero_order * f.values[i];
    for (int a = 0; a < dim; ++a) {
      const auto& ax = g.axis(a);
      const int k = idx[a];
      const double hm = ax[k] - ax[k - 1];
      const double hp = ax[k + 1] - ax[k];
      auto nb = idx;
      nb[a] = k - 1;
      const double fm = f.values[g.flat_index(nb)];
      nb[a] = k + 1;
      const double fp = f.values[g.flat_index(nb)];
      const auto w2 = second_derivative_weights(hm, hp);
      acc += c.laplacian_sign *
             (w2.left * fm + w2.center * f.values[i] + w2.right * fp);
      if (a == dim - 1 && c.drift != 0.0) {
        const auto w1 = first_derivative_weights(hm, hp);
        acc += c.drift * (w1.left * fm + w1.center * f.values[i] + w1.right * fp);
      }
    }
    out.values[i] = acc;
  }
  return out;
}

}  // namespace hjlab
