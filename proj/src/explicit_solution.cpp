#include "hjlab/explicit_solution.hpp"

#include <cmath>
#include <stdexcept>

#include "hjlab/stencil.hpp"

namespace hjlab {

ExplicitSolution::ExplicitSolution(const Parameters& params)
    : params_(params) {
  if (!(params.t > 0.0)) {
    throw std::invalid_argument("ExplicitSolution: t must be > 0");
  }
}

double ExplicitSolution::value(double x_n) const {
  const double p = params_.p, t = params_.t;
  const double e = (p - 2.0) / (p - 1.0);
  return (std::pow((p - 1.0) * x_n + t, e) - std::pow(t, e)) / (p - 2.0);
}

double ExplicitSolution::slope(double x_n) const {
  return std::pow((params_.p - 1.0) * x_n + params_.t, -params_.alpha);
}

double ExplicitSolution::second(double x_n) const {
  return -std::pow((params_.p - 1.0) * x_n + params_.t, -params_.alpha - 1.0);
}

double ExplicitSolution::limit_at_infinity() const {
  const double p = params_.p, t = params_.t;
  return std::pow(t, (p - 2.0) / (p - 1.0)) / (2.0 - p);
}

double u_t_eval(double x_n, const Parameters& params) {
  if (x_n < 0.0) {
    throw std::invalid_argument("u_t_eval: x_N must be >= 0");
  }
  return ExplicitSolution(params).value(x_n);
}

UtResidualReport u_t_residual(const Grid& grid, const Parameters& params) {
  const ExplicitSolution u(params);
  const auto& xs = grid.vertical_axis();
  const int n = static_cast<int>(xs.size());

  UtResidualReport rep;
  for (int j = 1; j + 1 < n; ++j) {
    const double hm = xs[j] - xs[j - 1];
    const double hp = xs[j + 1] - xs[j];
    const auto w1 = first_derivative_weights(hm, hp);
    const auto w2 = second_derivative_weights(hm, hp);
    const double um = u.value(xs[j - 1]), uc = u.value(xs[j]),
                 up = u.value(xs[j + 1]);
    const double d1 = w1.left * um + w1.center * uc + w1.right * up;
    const double d2 = w2.left * um + w2.center * uc + w2.right * up;
    const double r = std::abs(-d2 - std::pow(std::abs(d1), params.p));
    rep.max_residual_stencil = std::max(rep.max_residual_stencil, r);

    const double ra = std::abs(-u.second(xs[j]) -
                               std::pow(std::abs(u.slope(xs[j])), params.p));
    rep.max_residual_analytic = std::max(rep.max_residual_analytic, ra);
  }
  return rep;
}

}  // namespace hjlab
