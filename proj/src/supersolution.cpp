#include "hjlab/supersolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hjlab {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (b <= a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_step(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), tol,
                       40);
}

// Value-tier weighted sup over nodes with the split at the node nearest 1.
void value_tier_sups(const std::vector<double>& xs,
                     const std::vector<double>& vs, double w_in, double w_out,
                     double* inner, double* outer) {
  std::size_t split = 0;
  double best = std::abs(xs[0] - 1.0);
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (std::abs(xs[j] - 1.0) < best) {
      best = std::abs(xs[j] - 1.0);
      split = j;
    }
  }
  *inner = 0.0;
  *outer = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double v = std::abs(vs[j]);
    if (j <= split) *inner = std::max(*inner, std::pow(xs[j], w_in) * v);
    if (j >= split) *outer = std::max(*outer, std::pow(xs[j], w_out) * v);
  }
}

}  // namespace

SupersolutionResult one_dim_supersolution(const OneDimSource& source,
                                          const std::vector<double>& nodes,
                                          const Parameters& params) {
  if (nodes.size() < 3) {
    throw std::invalid_argument("one_dim_supersolution: need >= 3 nodes");
  }
  if (!(source.tail_exponent > 1.0)) {
    throw std::invalid_argument(
        "one_dim_supersolution: divergent tail integral "
        "(need tail_exponent > 1)");
  }
  const std::size_t n = nodes.size();
  const double quad_tol = 1e-12;

  SupersolutionResult res;
  res.nodes = nodes;
  res.source.resize(n);
  for (std::size_t j = 0; j < n; ++j) res.source[j] = source.rule(nodes[j]);

  // F(x_j) = int_0^{x_j} tau h(tau) dtau, cumulated cell by cell. The lower
  // endpoint starts just above zero; the integrand tau*h is integrable
  // there for any Y_psi-class source.
  auto th = [&](double tau) { return tau * source.rule(tau); };
  std::vector<double> F(n);
  const double lo = std::min(1e-10, 0.5 * nodes.front());
  F[0] = integrate(th, lo, nodes[0], quad_tol);
  for (std::size_t j = 1; j < n; ++j) {
    F[j] = F[j - 1] + integrate(th, nodes[j - 1], nodes[j], quad_tol);
  }

  // T(x_j) = int_{x_j}^infty h, cumulated backward from the top node. The
  // remainder beyond the top is exact when tail_integral is given, else
  // truncated with the envelope bound.
  std::vector<double> T(n);
  const double top = nodes.back();
  const double anchor = std::max(top, source.tail_start);
  double beyond = integrate(source.rule, top, anchor, quad_tol);
  if (source.tail_integral) {
    beyond += source.tail_integral(anchor);
  } else {
    const double s = source.tail_exponent;
    res.tail_error_bound =
        source.tail_coefficient * std::pow(anchor, 1.0 - s) / (s - 1.0);
  }
  T[n - 1] = beyond;
  for (std::size_t j = n - 1; j > 0; --j) {
    T[j - 1] = T[j] + integrate(source.rule, nodes[j - 1], nodes[j], quad_tol);
  }

  res.profile.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    res.profile[j] = F[j] + nodes[j] * T[j];
  }

  double in = 0.0, out = 0.0;
  value_tier_sups(nodes, res.profile, params.sigma - 1.0,
                  params.alpha - 1.0 - params.mu, &in, &out);
  res.x_psi_norm = std::max(in, out);
  value_tier_sups(nodes, res.source, params.sigma + 1.0,
                  params.alpha + 1.0 - params.mu, &in, &out);
  res.y_psi_norm = std::max(in, out);
  res.norm_ratio =
      res.y_psi_norm > 0.0 ? res.x_psi_norm / res.y_psi_norm : 0.0;
  return res;
}

double barrier_source_value(double x, const Parameters& params) {
  const double s = params.alpha + 1.0 - params.mu;
  double v = 0.0;
  if (x > 0.0 && x < 2.0) v += std::pow(x, -params.sigma - 1.0);
  if (x > 1.0) v += std::pow(x, -s);
  return v;
}

double barrier_profile_value(double x, const Parameters& params) {
  if (x <= 0.0) return 0.0;
  const double sg = params.sigma;
  const double s = params.alpha + 1.0 - params.mu;  // in (1,2)
  // F = int_0^x tau h0, T = int_x^infty h0, piece by piece.
  const double fa = std::pow(std::min(x, 2.0), 1.0 - sg) / (1.0 - sg);
  const double fb = x <= 1.0 ? 0.0 : (std::pow(x, 2.0 - s) - 1.0) / (2.0 - s);
  const double ta = x >= 2.0 ? 0.0 : (std::pow(x, -sg) - std::pow(2.0, -sg)) / sg;
  const double tb =
      x >= 1.0 ? std::pow(x, 1.0 - s) / (s - 1.0) : 1.0 / (s - 1.0);
  return fa + fb + x * (ta + tb);
}

OneDimSource default_barrier_source(const Parameters& params) {
  OneDimSource src;
  src.rule = [params](double x) { return barrier_source_value(x, params); };
  const double s = params.alpha + 1.0 - params.mu;
  src.tail_coefficient = 1.0;
  src.tail_exponent = s;
  src.tail_start = 2.0;
  src.tail_integral = [s](double x) {
    return std::pow(x, 1.0 - s) / (s - 1.0);
  };
  return src;
}

}  // namespace hjlab
