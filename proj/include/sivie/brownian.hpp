#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <stdexcept>

namespace sivie {

/// One realization of standard Brownian motion, sampled lazily.
///
/// Values are drawn on demand and memoized, so every time the path is asked
/// for B(t) at the same t it answers identically. A time between two known
/// times is drawn from the Brownian bridge through its neighbours; a time past
/// the last known time extends the path by an independent Gaussian increment.
/// The joint law of all queried values is therefore exact, but the values
/// themselves depend on the order in which times are first queried.
///
/// Not thread-safe: sample() mutates the memo. Use one sampler per worker.
class BrownianSampler {
 public:
  explicit BrownianSampler(std::uint64_t seed);

  /// B(t) for t >= 0; throws std::invalid_argument for negative or non-finite t.
  double sample(double t);

  std::uint64_t seed() const { return seed_; }

  /// Every (t, B(t)) drawn so far, ordered by t. Always contains (0, 0).
  const std::map<double, double>& known() const { return known_; }

 private:
  std::uint64_t seed_;
  std::map<double, double> known_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

/// Number of left-point subintervals used for an Ito sum.
struct ItoConfig {
  int n = 1000;
};

/// Left-endpoint Ito sum of g against the sampler's path over [0, zeta]:
///   sum_{j=1}^{n} g(zeta_{j-1}) (B(zeta_j) - B(zeta_{j-1})),  zeta_j = j zeta / n.
/// The final node is exactly zeta. Summation is compensated so the constant
/// integrand telescopes to c * B(zeta) up to a few ulps.
template <class G>
double ito_integral(BrownianSampler& sampler, G&& g, double zeta, ItoConfig cfg) {
  if (cfg.n < 1) throw std::invalid_argument("Ito subdivision count must be >= 1");
  if (!(zeta >= 0.0)) throw std::invalid_argument("Ito upper limit must be >= 0");
  if (zeta == 0.0) return 0.0;
  double sum = 0.0;
  double carry = 0.0;
  double t_prev = 0.0;
  double b_prev = sampler.sample(0.0);
  for (int j = 1; j <= cfg.n; ++j) {
    const double t = (j == cfg.n) ? zeta : zeta * j / cfg.n;
    const double b = sampler.sample(t);
    const double term = g(t_prev) * (b - b_prev);
    // Neumaier summation.
    const double next = sum + term;
    carry += (std::abs(sum) >= std::abs(term)) ? (sum - next) + term : (term - next) + sum;
    sum = next;
    t_prev = t;
    b_prev = b;
  }
  return sum + carry;
}

/// Writes the memoized path as "t,B" CSV with a header row, 17 significant digits.
void write_path_csv(const BrownianSampler& sampler, std::ostream& out);

}  // namespace sivie
