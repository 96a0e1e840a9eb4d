#pragma once

#include "sivie/brownian.hpp"
#include "sivie/problem.hpp"

namespace sivie {

inline constexpr int kDefaultOracleSteps = 10000;

/// Z = Z0 + int (alpha Z + beta Z^2) d eta + gamma int Z dB. Defaults are the
/// reference benchmark parameters.
struct Problem1Params {
  double alpha = 1.0 / 8.0;
  double beta = 1.0 / 32.0;
  double gamma = 1.0 / 20.0;
  double Z0 = 1.0 / 10.0;
};

/// Z = Z0 + alpha^2 int cos(Z) sin^3(Z) d eta - alpha int sin^2(Z) dB.
struct Problem2Params {
  double alpha = 1.0 / 20.0;
  double Z0 = 1.0 / 20.0;
};

/// delta1 = delta2 = 1, p = alpha Z + beta Z^2, q = gamma Z. The attached
/// oracle is exact1 with `oracle_n` trapezoid steps. Throws
/// std::invalid_argument when Z0 == 0 or oracle_n < 2.
ProblemSpec problem1(const Problem1Params& params, int oracle_n = kDefaultOracleSteps);

/// Path-wise closed form
///   Z(zeta) = exp((alpha - gamma^2/2) zeta + gamma B(zeta))
///             / (1/Z0 - beta int_0^zeta exp((alpha - gamma^2/2) eta + gamma B(eta)) d eta)
/// with the path functional integrated by the composite trapezoid rule on
/// oracle_n + 1 uniform nodes of [0, zeta], all drawn from `path`. Throws
/// std::domain_error if the denominator is within 1e-12 of zero (the
/// Bernoulli dynamics have exploded).
double exact1(BrownianSampler& path, double zeta, const Problem1Params& params, int oracle_n = kDefaultOracleSteps);

/// delta1 = alpha^2, p = cos(Z) sin^3(Z), delta2 = -alpha, q = sin^2(Z).
/// Throws std::invalid_argument unless Z0 lies in (0, pi).
ProblemSpec problem2(const Problem2Params& params);

/// Z(zeta) = arccot(alpha B(zeta) + cot Z0) on the branch with range (0, pi).
double exact2(BrownianSampler& path, double zeta, const Problem2Params& params);

/// arccot with range (0, pi), continuous in its argument.
double arccot(double x);

}  // namespace sivie
