#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "sivie/basis.hpp"
#include "sivie/brownian.hpp"
#include "sivie/problem.hpp"

namespace sivie {

/// Newton-Cotes midpoint nodes x_k = (2k+1) T / (2(m+1)), k = 0..m.
std::vector<double> collocation_points(int m, double horizon_T);

/// The collocated equations, with everything that does not depend on the
/// coefficients (quadrature nodes, basis values, Brownian increments) drawn
/// once at construction. Component k of residual(h) is
///
///   Z_m(x_k) - Z0 - delta1 (x_k/2) sum_r w_r p(eta_r, Z_m(eta_r))
///            - delta2 sum_{i=1}^{n} q(s_{i-1}, Z_m(s_{i-1})) (B(s_i) - B(s_{i-1}))
///
/// with eta_r = x_k/2 (tau_r + 1) and s_i = i x_k / n, all increments taken
/// from one shared path.
class CollocationSystem {
 public:
  CollocationSystem(const ProblemSpec& problem, const SolverConfig& cfg, BrownianSampler& sampler);

  Eigen::VectorXd residual(const Eigen::VectorXd& h) const;

  const ChelyshkovBasis& basis() const { return basis_; }
  const std::vector<double>& points() const { return points_; }

 private:
  const ProblemSpec& problem_;
  ChelyshkovBasis basis_;
  std::vector<double> points_;
  Eigen::MatrixXd point_rows_;

  // Drift nodes, stored point-major: quad_order entries per collocation point.
  std::vector<double> drift_times_;
  Eigen::VectorXd drift_weights_;
  Eigen::MatrixXd drift_rows_;

  // Left Ito nodes, ito_n per collocation point.
  std::vector<double> noise_times_;
  Eigen::VectorXd noise_increments_;
  Eigen::MatrixXd noise_rows_;

  int drift_per_point_ = 0;
  int noise_per_point_ = 0;
};

/// Convenience form of CollocationSystem(problem, cfg, sampler).residual(h).
Eigen::VectorXd residual_ocsc(const ProblemSpec& problem, const SolverConfig& cfg, BrownianSampler& sampler,
                              const Eigen::VectorXd& h);

/// Solves the collocated system by Newton from the projection of the constant
/// Z0 (or from `initial_guess` when given). The sampler is extended with every
/// time the assembly needs; pass the same sampler to the exact oracle to get a
/// path-wise comparison. Throws ConvergenceError if Newton fails.
SpectralSolution solve_ocsc(const ProblemSpec& problem, const SolverConfig& cfg, BrownianSampler& sampler,
                            const std::optional<Eigen::VectorXd>& initial_guess = std::nullopt);

}  // namespace sivie
