#include "sivie/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "sivie/quadrature.hpp"

namespace sivie {

std::string to_string(Method method) { return method == Method::kCollocation ? "ocsc" : "ocsg"; }

Method parse_method(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "ocsc") return Method::kCollocation;
  if (lower == "ocsg") return Method::kGalerkin;
  throw std::invalid_argument("unknown method '" + name + "' (expected ocsc or ocsg)");
}

void validate(const SolverConfig& cfg) {
  if (cfg.m < 0 || cfg.m > ChelyshkovBasis::kMaxDegreeCap) {
    throw std::invalid_argument("m must lie in [0, " + std::to_string(ChelyshkovBasis::kMaxDegreeCap) + "]");
  }
  if (cfg.quad_order < 1 || cfg.quad_order > kMaxGaussOrder) {
    throw std::invalid_argument("quad_order must lie in [1, " + std::to_string(kMaxGaussOrder) + "]");
  }
  if (cfg.ito_n < 1) throw std::invalid_argument("ito_n must be >= 1");
  if (!(cfg.horizon_T > 0.0) || !std::isfinite(cfg.horizon_T)) throw std::invalid_argument("horizon_T must be > 0");
}

Eigen::RowVectorXd scaled_basis_row(const ChelyshkovBasis& basis, double zeta, double horizon_T) {
  const double t = std::clamp(zeta / horizon_T, 0.0, 1.0);
  return basis.eval_all(t).transpose() / std::sqrt(horizon_T);
}

Eigen::VectorXd constant_projection(const ChelyshkovBasis& basis, double z0, double horizon_T) {
  return z0 * std::sqrt(horizon_T) * basis.integrals();
}

double SpectralSolution::evaluate(double zeta) const {
  if (!(zeta >= 0.0 && zeta <= config.horizon_T)) throw std::out_of_range("evaluation point outside [0, T]");
  return scaled_basis_row(basis, zeta, config.horizon_T).dot(h);
}

}  // namespace sivie
