#include "sivie/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sivie {
namespace {

constexpr int kMaxRefinements = 100;
constexpr double kStepTolerance = 1e-15;

struct LegendreValue {
  double value;
  double derivative;
};

// P_n(x) and P'_n(x) by the three-term recurrence.
LegendreValue legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

GaussRule gauss_legendre(int order) {
  if (order < 1 || order > kMaxGaussOrder) {
    throw std::invalid_argument("Gauss-Legendre order " + std::to_string(order) + " outside [1, " +
                                std::to_string(kMaxGaussOrder) + "]");
  }
  GaussRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);

  // Roots come in +/- pairs; refine the positive half and mirror.
  const int half = (order + 1) / 2;
  for (int r = 0; r < half; ++r) {
    double x = std::cos(std::numbers::pi * (r + 0.75) / (order + 0.5));
    bool converged = false;
    for (int it = 0; it < kMaxRefinements; ++it) {
      const auto [p, dp] = legendre(order, x);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) <= kStepTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("Gauss-Legendre root " + std::to_string(r) + " of order " + std::to_string(order) +
                               " did not converge");
    }
    if (order % 2 == 1 && r == half - 1) x = 0.0;
    const double dp = legendre(order, x).derivative;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - r] = x;
    rule.nodes[r] = -x;
    rule.weights[order - 1 - r] = w;
    rule.weights[r] = w;
  }
  return rule;
}

}  // namespace sivie
