#include "sivie/brownian.hpp"

#include <cmath>
#include <cstdio>
#include <iterator>
#include <ostream>

namespace sivie {

BrownianSampler::BrownianSampler(std::uint64_t seed) : seed_(seed), rng_(seed) { known_.emplace(0.0, 0.0); }

double BrownianSampler::sample(double t) {
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("Brownian path queried at a negative or non-finite time");
  const auto upper = known_.lower_bound(t);
  if (upper != known_.end() && upper->first == t) return upper->second;

  double value;
  if (upper == known_.end()) {
    const auto& [t_last, b_last] = *known_.rbegin();
    value = b_last + std::sqrt(t - t_last) * normal_(rng_);
  } else {
    // 0 is always known and t > 0, so a lower neighbour exists.
    const auto lower = std::prev(upper);
    const double t1 = lower->first;
    const double t2 = upper->first;
    const double b1 = lower->second;
    const double b2 = upper->second;
    const double mean = b1 + (b2 - b1) * (t - t1) / (t2 - t1);
    const double var = (t - t1) * (t2 - t) / (t2 - t1);
    value = mean + std::sqrt(var) * normal_(rng_);
  }
  known_.emplace_hint(upper, t, value);
  return value;
}

void write_path_csv(const BrownianSampler& sampler, std::ostream& out) {
  out << "t,B\n";
  char buf[64];
  for (const auto& [t, b] : sampler.known()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, b);
    out << buf;
  }
}

}  // namespace sivie
