#pragma once

#include <stdexcept>
#include <vector>

namespace sivie {

/// N-point Gauss-Legendre rule on [-1,1]: ascending nodes, positive weights,
/// exact for polynomials of degree <= 2N-1.
struct GaussRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kMaxGaussOrder = 64;

/// Builds the rule by Newton refinement of the Legendre roots from the usual
/// cosine-spaced guesses. Throws std::invalid_argument for order outside
/// [1, kMaxGaussOrder] and std::runtime_error if a root fails to converge.
GaussRule gauss_legendre(int order);

/// (b-a)/2 * sum_r w_r f((b-a)/2 tau_r + (a+b)/2).
template <class F>
double integrate(F&& f, double a, double b, const GaussRule& rule) {
  if (a > b) throw std::invalid_argument("integrate: lower limit exceeds upper limit");
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t r = 0; r < rule.nodes.size(); ++r) sum += rule.weights[r] * f(half * rule.nodes[r] + mid);
  return half * sum;
}

}  // namespace sivie
