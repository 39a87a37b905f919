#include "hjlab/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hjlab {

const char* norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::X: return "X";
    case NormKind::Y: return "Y";
    case NormKind::Xhat: return "Xhat";
    case NormKind::Xpsi: return "Xpsi";
    case NormKind::Ypsi: return "Ypsi";
    case NormKind::XpsiHat: return "XpsiHat";
  }
  return "?";
}

bool norm_needs_derivatives(NormKind kind) {
  return kind == NormKind::X || kind == NormKind::Xhat ||
         kind == NormKind::XpsiHat;
}

namespace {

struct TierWeights {
  // Weight exponents for the value / gradient / Laplacian tiers; NaN marks
  // an absent tier.
  double value, grad, lap;
};

constexpr double kNone = std::numeric_limits<double>::quiet_NaN();

TierWeights tier_weights(NormKind kind, const Parameters& p, bool inner) {
  const double s = p.sigma, a = p.alpha, m = p.mu;
  switch (kind) {
    case NormKind::X:
      return inner ? TierWeights{kNone, s, kNone} : TierWeights{kNone, a, kNone};
    case NormKind::Y:
      return inner ? TierWeights{s + 1, kNone, kNone}
                   : TierWeights{a + 1, kNone, kNone};
    case NormKind::Xhat:
      return inner ? TierWeights{kNone, s, s + 1} : TierWeights{kNone, a, a + 1};
    case NormKind::Xpsi:
      return inner ? TierWeights{s - 1, kNone, kNone}
                   : TierWeights{a - 1 - m, kNone, kNone};
    case NormKind::Ypsi:
      return inner ? TierWeights{s + 1, kNone, kNone}
                   : TierWeights{a + 1 - m, kNone, kNone};
    case NormKind::XpsiHat:
      return inner ? TierWeights{s - 1, s, s + 1}
                   : TierWeights{a - 1 - m, a - m, a + 1 - m};
  }
  return {kNone, kNone, kNone};
}

double gradient_magnitude(const DerivativeSet& d, std::size_t i) {
  double sq = 0.0;
  for (int a = 0; a < d.dimension; ++a) {
    const double v = d.grad[a].values[i];
    sq += v * v;
  }
  return std::sqrt(sq);
}

WeightedNormReport accumulate(const Field& f, const Parameters& params,
                              NormKind kind, const DerivativeSet* derivs,
                              const std::array<double, 3>* lo,
                              const std::array<double, 3>* hi) {
  const Grid& g = *f.grid;
  if (!all_finite(f)) {
    throw std::invalid_argument("weighted_norm: non-finite field values");
  }
  if (derivs != nullptr && derivs->dimension != g.dimension()) {
    throw std::invalid_argument("weighted_norm: derivative set dimension mismatch");
  }
  WeightedNormReport rep;
  rep.kind = kind;
  const int split = g.split_index();

  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = g.point(i);
    if (lo != nullptr) {
      bool inside = true;
      for (int a = 0; a < g.dimension(); ++a) {
        if (x[a] < (*lo)[a] || x[a] > (*hi)[a]) inside = false;
      }
      if (!inside) continue;
    }
    const int jv = g.vertical_index(i);
    const double xn = g.vertical_coord(i);
    const bool lap_valid = !g.is_boundary(i);

    auto tier_value = [&](const TierWeights& w) {
      double q = 0.0;
      if (!std::isnan(w.value)) q += std::pow(xn, w.value) * std::abs(f.values[i]);
      if (!std::isnan(w.grad)) {
        q += std::pow(xn, w.grad) * gradient_magnitude(*derivs, i);
      }
      if (!std::isnan(w.lap) && lap_valid) {
        q += std::pow(xn, w.lap) * std::abs(derivs->lap.values[i]);
      }
      return q;
    };

    if (jv <= split) {
      const double q = tier_value(tier_weights(kind, params, true));
      if (q > rep.inner) {
        rep.inner = q;
        rep.inner_argmax = i;
        rep.inner_point = x;
      }
    }
    if (jv >= split) {
      const double q = tier_value(tier_weights(kind, params, false));
      if (q > rep.outer) {
        rep.outer = q;
        rep.outer_argmax = i;
        rep.outer_point = x;
      }
    }
  }
  rep.total = std::max(rep.inner, rep.outer);
  return rep;
}

}  // namespace

WeightedNormReport weighted_norm(const Field& f, const Parameters& params,
                                 NormKind kind) {
  if (norm_needs_derivatives(kind)) {
    const DerivativeSet d = discrete_derivatives(f);
    return accumulate(f, params, kind, &d, nullptr, nullptr);
  }
  return accumulate(f, params, kind, nullptr, nullptr, nullptr);
}

WeightedNormReport weighted_norm(const Field& f, const Parameters& params,
                                 NormKind kind, const DerivativeSet& derivs) {
  return accumulate(f, params, kind, &derivs, nullptr, nullptr);
}

WeightedNormReport weighted_norm_window(const Field& f,
                                        const Parameters& params,
                                        NormKind kind,
                                        const DerivativeSet& derivs,
                                        const std::array<double, 3>& lo,
                                        const std::array<double, 3>& hi) {
  return accumulate(f, params, kind, &derivs, &lo, &hi);
}

std::string to_key_value(const WeightedNormReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "kind=" << norm_kind_name(report.kind) << "\n"
     << "inner=" << report.inner << "\n"
     << "outer=" << report.outer << "\n"
     << "total=" << report.total << "\n"
     << "inner_node=" << report.inner_argmax << "\n"
     << "outer_node=" << report.outer_argmax << "\n";
  os << "inner_point=";
  for (double v : report.inner_point) os << v << " ";
  os << "\nouter_point=";
  for (double v : report.outer_point) os << v << " ";
  os << "\n";
  return os.str();
}

}  // namespace hjlab
