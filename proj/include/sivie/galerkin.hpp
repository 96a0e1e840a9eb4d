#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "sivie/basis.hpp"
#include "sivie/brownian.hpp"
#include "sivie/problem.hpp"

namespace sivie {

/// SolverConfig plus the order of the outer rule over [0,T]. quad_order is
/// the inner rule for each drift integral int_0^zeta p d eta.
struct GalerkinConfig : SolverConfig {
  int outer_quad_order = 16;
};

void validate(const GalerkinConfig& cfg);

/// The Galerkin equations under unit weight. Component l of residual(h) is
///
///   h_l - <Z0, psi_l> - delta1 <P(Z_m), psi_l> - delta2 <I(Z_m), psi_l>
///
/// where <Z0, psi_l> comes from exact monomial moments, the outer integral
/// over [0,T] uses the outer Gauss rule at nodes zeta_r, each inner drift
/// integral over [0, zeta_r] uses the inner rule, and each Ito integral is the
/// left-point sum on ito_n subintervals of [0, zeta_r]. Orthonormality of the
/// scaled basis collapses <Z_m, psi_l> to h_l.
class GalerkinSystem {
 public:
  GalerkinSystem(const ProblemSpec& problem, const GalerkinConfig& cfg, BrownianSampler& sampler);

  Eigen::VectorXd residual(const Eigen::VectorXd& h) const;

  const ChelyshkovBasis& basis() const { return basis_; }
  const std::vector<double>& outer_nodes() const { return outer_nodes_; }

 private:
  const ProblemSpec& problem_;
  ChelyshkovBasis basis_;
  Eigen::VectorXd constant_term_;

  std::vector<double> outer_nodes_;
  // Row r is (T/2) W_r psi(zeta_r).
  Eigen::MatrixXd weighted_outer_rows_;

  std::vector<double> drift_times_;
  Eigen::VectorXd drift_weights_;
  Eigen::MatrixXd drift_rows_;

  std::vector<double> noise_times_;
  Eigen::VectorXd noise_increments_;
  Eigen::MatrixXd noise_rows_;

  int drift_per_node_ = 0;
  int noise_per_node_ = 0;
};

Eigen::VectorXd residual_ocsg(const ProblemSpec& problem, const GalerkinConfig& cfg, BrownianSampler& sampler,
                              const Eigen::VectorXd& h);

/// Newton on the Galerkin system from the projection of Z0; same path-sharing
/// contract as solve_ocsc. Throws ConvergenceError if Newton fails.
SpectralSolution solve_ocsg(const ProblemSpec& problem, const GalerkinConfig& cfg, BrownianSampler& sampler,
                            const std::optional<Eigen::VectorXd>& initial_guess = std::nullopt);

}  // namespace sivie
