#include "sivie/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <stdexcept>

namespace sivie {
namespace {

constexpr double kBlowUpThreshold = 1e-12;

}  // namespace

double arccot(double x) { return std::atan2(1.0, x); }

ProblemSpec problem1(const Problem1Params& params, int oracle_n) {
  if (params.Z0 == 0.0) throw std::invalid_argument("problem1: Z0 must be non-zero");
  if (oracle_n < 2) throw std::invalid_argument("problem1: oracle_n must be >= 2");
  ProblemSpec spec;
  spec.name = "problem1";
  spec.Z0 = params.Z0;
  spec.delta1 = 1.0;
  spec.delta2 = 1.0;
  spec.p = [a = params.alpha, b = params.beta](double, double z) { return a * z + b * z * z; };
  spec.q = [g = params.gamma](double, double z) { return g * z; };
  spec.exact = [params, oracle_n](BrownianSampler& path, double zeta) { return exact1(path, zeta, params, oracle_n); };
  return spec;
}

double exact1(BrownianSampler& path, double zeta, const Problem1Params& params, int oracle_n) {
  if (oracle_n < 2) throw std::invalid_argument("exact1: oracle_n must be >= 2");
  if (!(zeta >= 0.0)) throw std::invalid_argument("exact1: zeta must be >= 0");
  const double drift = params.alpha - 0.5 * params.gamma * params.gamma;
  auto integrand = [&](double t) { return std::exp(drift * t + params.gamma * path.sample(t)); };

  const double numerator = integrand(zeta);
  double integral = 0.0;
  if (zeta > 0.0) {
    double sum = 0.5 * integrand(0.0);
    for (int j = 1; j < oracle_n; ++j) sum += integrand(zeta * j / oracle_n);
    sum += 0.5 * numerator;
    integral = sum * zeta / oracle_n;
  }
  const double denominator = 1.0 / params.Z0 - params.beta * integral;
  if (std::abs(denominator) <= kBlowUpThreshold) {
    throw std::domain_error("exact1: solution blows up before zeta = " + std::to_string(zeta));
  }
  return numerator / denominator;
}

ProblemSpec problem2(const Problem2Params& params) {
  if (!(params.Z0 > 0.0 && params.Z0 < std::numbers::pi)) throw std::invalid_argument("problem2: Z0 must lie in (0, pi)");
  ProblemSpec spec;
  spec.name = "problem2";
  spec.Z0 = params.Z0;
  spec.delta1 = params.alpha * params.alpha;
  spec.delta2 = -params.alpha;
  spec.p = [](double, double z) {
    const double s = std::sin(z);
    return std::cos(z) * s * s * s;
  };
  spec.q = [](double, double z) {
    const double s = std::sin(z);
    return s * s;
  };
  spec.exact = [params](BrownianSampler& path, double zeta) { return exact2(path, zeta, params); };
  return spec;
}

double exact2(BrownianSampler& path, double zeta, const Problem2Params& params) {
  if (!(zeta >= 0.0)) throw std::invalid_argument("exact2: zeta must be >= 0");
  const double cot_z0 = std::cos(params.Z0) / std::sin(params.Z0);
  return arccot(params.alpha * path.sample(zeta) + cot_z0);
}

}  // namespace sivie
