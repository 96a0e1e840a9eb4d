#include "sivie/newton.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/LU>

namespace sivie {
namespace {

constexpr double kPivotFloor = 1e-14;

double max_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

std::string to_string(NewtonStatus status) {
  switch (status) {
    case NewtonStatus::kResidualConverged: return "residual_converged";
    case NewtonStatus::kStepConverged: return "step_converged";
    case NewtonStatus::kMaxIterations: return "max_iterations";
    case NewtonStatus::kSingularJacobian: return "singular_jacobian";
    case NewtonStatus::kNonFinite: return "non_finite";
  }
  return "unknown";
}

Eigen::MatrixXd fd_jacobian(const VectorFunction& f, const Eigen::VectorXd& x, double fd_step_scale) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd jac(f0.size(), x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double h = fd_step_scale * std::max(1.0, std::abs(x(j)));
    xp(j) = x(j) + h;
    // Use the step actually representable in floating point.
    const double dx = xp(j) - x(j);
    jac.col(j) = (f(xp) - f0) / dx;
    xp(j) = x(j);
  }
  return jac;
}

NewtonReport solve_newton(const VectorFunction& f, const Eigen::VectorXd& x0, const NewtonConfig& cfg) {
  if (!(cfg.residual_tol > 0.0) || !(cfg.step_tol > 0.0) || !(cfg.fd_step_scale > 0.0) || cfg.max_iter < 1) {
    throw std::invalid_argument("Newton tolerances must be positive and max_iter >= 1");
  }
  NewtonReport report;
  report.solution = x0;
  Eigen::VectorXd r = f(report.solution);
  if (r.size() != x0.size()) throw std::invalid_argument("Newton residual dimension differs from unknown dimension");
  report.final_residual_norm = max_norm(r);
  report.residual_history.push_back(report.final_residual_norm);

  for (;;) {
    if (!std::isfinite(report.final_residual_norm)) {
      report.status = NewtonStatus::kNonFinite;
      return report;
    }
    if (report.final_residual_norm <= cfg.residual_tol) {
      report.status = NewtonStatus::kResidualConverged;
      report.converged = true;
      return report;
    }
    if (report.iterations >= cfg.max_iter) {
      report.status = NewtonStatus::kMaxIterations;
      return report;
    }

    const Eigen::MatrixXd jac = fd_jacobian(f, report.solution, cfg.fd_step_scale);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot >= kPivotFloor)) {
      report.status = NewtonStatus::kSingularJacobian;
      return report;
    }
    const Eigen::VectorXd step = lu.solve(r);
    report.solution -= step;
    ++report.iterations;
    r = f(report.solution);
    report.final_residual_norm = max_norm(r);
    report.residual_history.push_back(report.final_residual_norm);

    if (std::isfinite(report.final_residual_norm) && report.final_residual_norm > cfg.residual_tol &&
        max_norm(step) <= cfg.step_tol) {
      report.status = NewtonStatus::kStepConverged;
      report.converged = true;
      return report;
    }
  }
}

}  // namespace sivie
