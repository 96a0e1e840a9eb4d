#include "sivie/galerkin.hpp"

#include <stdexcept>
#include <string>

#include "sivie/quadrature.hpp"

namespace sivie {

void validate(const GalerkinConfig& cfg) {
  validate(static_cast<const SolverConfig&>(cfg));
  if (cfg.outer_quad_order < 1 || cfg.outer_quad_order > kMaxGaussOrder) {
    throw std::invalid_argument("outer_quad_order must lie in [1, " + std::to_string(kMaxGaussOrder) + "]");
  }
}

GalerkinSystem::GalerkinSystem(const ProblemSpec& problem, const GalerkinConfig& cfg, BrownianSampler& sampler)
    : problem_(problem), basis_((validate(cfg), cfg.m)) {
  if (!problem.p || !problem.q) throw std::invalid_argument("problem '" + problem.name + "' lacks p or q");
  const double T = cfg.horizon_T;
  const int unknowns = basis_.size();
  const GaussRule outer = gauss_legendre(cfg.outer_quad_order);
  const GaussRule inner = gauss_legendre(cfg.quad_order);
  const int r_count = outer.order;
  drift_per_node_ = inner.order;
  noise_per_node_ = cfg.ito_n;

  constant_term_ = constant_projection(basis_, problem.Z0, T);

  outer_nodes_.resize(r_count);
  weighted_outer_rows_.resize(r_count, unknowns);
  drift_times_.resize(static_cast<std::size_t>(r_count) * drift_per_node_);
  drift_weights_.resize(r_count * drift_per_node_);
  drift_rows_.resize(r_count * drift_per_node_, unknowns);
  noise_times_.resize(static_cast<std::size_t>(r_count) * noise_per_node_);
  noise_increments_.resize(r_count * noise_per_node_);
  noise_rows_.resize(r_count * noise_per_node_, unknowns);

  for (int r = 0; r < r_count; ++r) {
    const double zeta = 0.5 * T * outer.nodes[r] + 0.5 * T;
    outer_nodes_[r] = zeta;
    weighted_outer_rows_.row(r) = 0.5 * T * outer.weights[r] * scaled_basis_row(basis_, zeta, T);

    const double half = 0.5 * zeta;
    for (int s = 0; s < drift_per_node_; ++s) {
      const int idx = r * drift_per_node_ + s;
      const double eta = half * inner.nodes[s] + half;
      drift_times_[idx] = eta;
      drift_weights_(idx) = half * inner.weights[s];
      drift_rows_.row(idx) = scaled_basis_row(basis_, eta, T);
    }

    double s_prev = 0.0;
    double b_prev = sampler.sample(0.0);
    for (int i = 1; i <= noise_per_node_; ++i) {
      const int idx = r * noise_per_node_ + (i - 1);
      const double s = (i == noise_per_node_) ? zeta : zeta * i / noise_per_node_;
      const double b = sampler.sample(s);
      noise_times_[idx] = s_prev;
      noise_increments_(idx) = b - b_prev;
      noise_rows_.row(idx) = scaled_basis_row(basis_, s_prev, T);
      s_prev = s;
      b_prev = b;
    }
  }
}

Eigen::VectorXd GalerkinSystem::residual(const Eigen::VectorXd& h) const {
  if (h.size() != basis_.size()) throw std::invalid_argument("residual_ocsg: coefficient vector has wrong length");
  const Eigen::VectorXd z_drift = drift_rows_ * h;
  const Eigen::VectorXd z_noise = noise_rows_ * h;

  const int r_count = static_cast<int>(outer_nodes_.size());
  Eigen::VectorXd drift(r_count);
  Eigen::VectorXd noise(r_count);
  for (int r = 0; r < r_count; ++r) {
    double d = 0.0;
    for (int s = 0; s < drift_per_node_; ++s) {
      const int idx = r * drift_per_node_ + s;
      d += drift_weights_(idx) * problem_.p(drift_times_[idx], z_drift(idx));
    }
    double w = 0.0;
    for (int i = 0; i < noise_per_node_; ++i) {
      const int idx = r * noise_per_node_ + i;
      w += problem_.q(noise_times_[idx], z_noise(idx)) * noise_increments_(idx);
    }
    drift(r) = d;
    noise(r) = w;
  }
  return h - constant_term_ - problem_.delta1 * (weighted_outer_rows_.transpose() * drift) -
         problem_.delta2 * (weighted_outer_rows_.transpose() * noise);
}

Eigen::VectorXd residual_ocsg(const ProblemSpec& problem, const GalerkinConfig& cfg, BrownianSampler& sampler,
                              const Eigen::VectorXd& h) {
  return GalerkinSystem(problem, cfg, sampler).residual(h);
}

SpectralSolution solve_ocsg(const ProblemSpec& problem, const GalerkinConfig& cfg, BrownianSampler& sampler,
                            const std::optional<Eigen::VectorXd>& initial_guess) {
  const GalerkinSystem system(problem, cfg, sampler);
  const Eigen::VectorXd x0 = initial_guess ? *initial_guess : constant_projection(system.basis(), problem.Z0, cfg.horizon_T);
  if (x0.size() != system.basis().size()) throw std::invalid_argument("solve_ocsg: initial guess has wrong length");

  NewtonReport report = solve_newton([&system](const Eigen::VectorXd& h) { return system.residual(h); }, x0, cfg.newton);
  if (!report.converged) {
    throw ConvergenceError("OCSG Newton solve for '" + problem.name + "' (m=" + std::to_string(cfg.m) +
                               ") stopped: " + to_string(report.status) + ", residual " +
                               std::to_string(report.final_residual_norm) + " after " +
                               std::to_string(report.iterations) + " iterations",
                           std::move(report));
  }
  return SpectralSolution{system.basis(), report.solution, Method::kGalerkin, cfg, std::move(report)};
}

}  // namespace sivie
