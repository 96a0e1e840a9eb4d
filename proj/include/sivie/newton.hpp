#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sivie {

using VectorFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

inline const double kDefaultFdStepScale = std::sqrt(std::numeric_limits<double>::epsilon());

struct NewtonConfig {
  double residual_tol = 1e-12;  // max-norm of F
  double step_tol = 1e-12;      // max-norm of the Newton step
  int max_iter = 100;
  double fd_step_scale = kDefaultFdStepScale;
};

enum class NewtonStatus {
  kResidualConverged,
  kStepConverged,
  kMaxIterations,
  kSingularJacobian,
  kNonFinite,
};

std::string to_string(NewtonStatus status);

struct NewtonReport {
  Eigen::VectorXd solution;
  int iterations = 0;
  double final_residual_norm = std::numeric_limits<double>::infinity();
  bool converged = false;
  NewtonStatus status = NewtonStatus::kMaxIterations;
  // Max-norm of F at the initial guess and after every step.
  std::vector<double> residual_history;
};

/// Forward-difference Jacobian. Column j is (F(x + h_j e_j) - F(x)) / h_j with
/// h_j = fd_step_scale * max(1, |x_j|).
Eigen::MatrixXd fd_jacobian(const VectorFunction& f, const Eigen::VectorXd& x,
                            double fd_step_scale = kDefaultFdStepScale);

/// Plain Newton iteration x <- x - J^{-1} F(x) with an LU solve (partial
/// pivoting). A pivot below 1e-14 in magnitude stops the iteration with
/// kSingularJacobian. Never throws for non-convergence; inspect the report.
NewtonReport solve_newton(const VectorFunction& f, const Eigen::VectorXd& x0, const NewtonConfig& cfg = {});

}  // namespace sivie
