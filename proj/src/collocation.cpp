#include "sivie/collocation.hpp"

#include <stdexcept>
#include <string>

#include "sivie/quadrature.hpp"

namespace sivie {

std::vector<double> collocation_points(int m, double horizon_T) {
  if (m < 0) throw std::invalid_argument("collocation_points: m must be >= 0");
  if (!(horizon_T > 0.0)) throw std::invalid_argument("collocation_points: T must be > 0");
  std::vector<double> x(m + 1);
  for (int k = 0; k <= m; ++k) x[k] = (2.0 * k + 1.0) * horizon_T / (2.0 * (m + 1));
  return x;
}

CollocationSystem::CollocationSystem(const ProblemSpec& problem, const SolverConfig& cfg, BrownianSampler& sampler)
    : problem_(problem), basis_((validate(cfg), cfg.m)), points_(collocation_points(cfg.m, cfg.horizon_T)) {
  if (!problem.p || !problem.q) throw std::invalid_argument("problem '" + problem.name + "' lacks p or q");
  const double T = cfg.horizon_T;
  const int k_count = static_cast<int>(points_.size());
  const int unknowns = basis_.size();
  const GaussRule rule = gauss_legendre(cfg.quad_order);
  drift_per_point_ = cfg.quad_order;
  noise_per_point_ = cfg.ito_n;

  point_rows_.resize(k_count, unknowns);
  drift_times_.resize(static_cast<std::size_t>(k_count) * drift_per_point_);
  drift_weights_.resize(k_count * drift_per_point_);
  drift_rows_.resize(k_count * drift_per_point_, unknowns);
  noise_times_.resize(static_cast<std::size_t>(k_count) * noise_per_point_);
  noise_increments_.resize(k_count * noise_per_point_);
  noise_rows_.resize(k_count * noise_per_point_, unknowns);

  for (int k = 0; k < k_count; ++k) {
    const double x = points_[k];
    point_rows_.row(k) = scaled_basis_row(basis_, x, T);

    const double half = 0.5 * x;
    for (int r = 0; r < drift_per_point_; ++r) {
      const int idx = k * drift_per_point_ + r;
      const double eta = half * rule.nodes[r] + half;
      drift_times_[idx] = eta;
      drift_weights_(idx) = half * rule.weights[r];
      drift_rows_.row(idx) = scaled_basis_row(basis_, eta, T);
    }

    double s_prev = 0.0;
    double b_prev = sampler.sample(0.0);
    for (int i = 1; i <= noise_per_point_; ++i) {
      const int idx = k * noise_per_point_ + (i - 1);
      const double s = (i == noise_per_point_) ? x : x * i / noise_per_point_;
      const double b = sampler.sample(s);
      noise_times_[idx] = s_prev;
      noise_increments_(idx) = b - b_prev;
      noise_rows_.row(idx) = scaled_basis_row(basis_, s_prev, T);
      s_prev = s;
      b_prev = b;
    }
  }
}

Eigen::VectorXd CollocationSystem::residual(const Eigen::VectorXd& h) const {
  if (h.size() != basis_.size()) throw std::invalid_argument("residual_ocsc: coefficient vector has wrong length");
  const Eigen::VectorXd z_points = point_rows_ * h;
  const Eigen::VectorXd z_drift = drift_rows_ * h;
  const Eigen::VectorXd z_noise = noise_rows_ * h;

  const int k_count = static_cast<int>(points_.size());
  Eigen::VectorXd out(k_count);
  for (int k = 0; k < k_count; ++k) {
    double drift = 0.0;
    for (int r = 0; r < drift_per_point_; ++r) {
      const int idx = k * drift_per_point_ + r;
      drift += drift_weights_(idx) * problem_.p(drift_times_[idx], z_drift(idx));
    }
    double noise = 0.0;
    for (int i = 0; i < noise_per_point_; ++i) {
      const int idx = k * noise_per_point_ + i;
      noise += problem_.q(noise_times_[idx], z_noise(idx)) * noise_increments_(idx);
    }
    out(k) = z_points(k) - problem_.Z0 - problem_.delta1 * drift - problem_.delta2 * noise;
  }
  return out;
}

Eigen::VectorXd residual_ocsc(const ProblemSpec& problem, const SolverConfig& cfg, BrownianSampler& sampler,
                              const Eigen::VectorXd& h) {
  return CollocationSystem(problem, cfg, sampler).residual(h);
}

SpectralSolution solve_ocsc(const ProblemSpec& problem, const SolverConfig& cfg, BrownianSampler& sampler,
                            const std::optional<Eigen::VectorXd>& initial_guess) {
  const CollocationSystem system(problem, cfg, sampler);
  const Eigen::VectorXd x0 = initial_guess ? *initial_guess : constant_projection(system.basis(), problem.Z0, cfg.horizon_T);
  if (x0.size() != system.basis().size()) throw std::invalid_argument("solve_ocsc: initial guess has wrong length");

  NewtonReport report = solve_newton([&system](const Eigen::VectorXd& h) { return system.residual(h); }, x0, cfg.newton);
  if (!report.converged) {
    throw ConvergenceError("OCSC Newton solve for '" + problem.name + "' (m=" + std::to_string(cfg.m) +
                               ") stopped: " + to_string(report.status) + ", residual " +
                               std::to_string(report.final_residual_norm) + " after " +
                               std::to_string(report.iterations) + " iterations",
                           std::move(report));
  }
  SpectralSolution solution{system.basis(), report.solution, Method::kCollocation, cfg, std::move(report)};
  return solution;
}

}  // namespace sivie
