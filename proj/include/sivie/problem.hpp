#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "sivie/basis.hpp"
#include "sivie/brownian.hpp"
#include "sivie/newton.hpp"

namespace sivie {

/// Z(zeta) = Z0 + delta1 * int_0^zeta p(eta, Z) d eta + delta2 * int_0^zeta q(eta, Z) dB(eta)
struct ProblemSpec {
  using Coefficient = std::function<double(double eta, double z)>;
  using ExactSolution = std::function<double(BrownianSampler& path, double zeta)>;

  std::string name;
  double Z0 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  Coefficient p;
  Coefficient q;
  // Empty when no closed form is known.
  ExactSolution exact;
};

enum class Method { kCollocation, kGalerkin };

std::string to_string(Method method);
/// Accepts "ocsc" / "ocsg" (case-insensitive); throws std::invalid_argument otherwise.
Method parse_method(const std::string& name);

struct SolverConfig {
  int m = 4;           // basis cap; m+1 unknowns
  int quad_order = 16; // Gauss-Legendre rule for drift integrals
  int ito_n = 1000;    // left-point subintervals per Ito sum
  double horizon_T = 1.0;
  NewtonConfig newton;
};

/// Throws std::invalid_argument if any field is out of range.
void validate(const SolverConfig& cfg);

/// Basis functions scaled to [0,T]: psi_j(zeta) = phi*_j(zeta/T) / sqrt(T),
/// orthonormal on [0,T]. zeta is clamped into [0,T] to absorb rounding.
Eigen::RowVectorXd scaled_basis_row(const ChelyshkovBasis& basis, double zeta, double horizon_T);

/// Coefficients of the constant function z0 in the scaled basis:
/// h_j = z0 * <1, psi_j> = z0 * sqrt(T) * int_0^1 phi*_j.
Eigen::VectorXd constant_projection(const ChelyshkovBasis& basis, double z0, double horizon_T);

struct SpectralSolution {
  ChelyshkovBasis basis;
  Eigen::VectorXd h;
  Method method = Method::kCollocation;
  SolverConfig config;
  NewtonReport report;

  /// Z_m(zeta) = sum_j h_j psi_j(zeta) for zeta in [0, T].
  double evaluate(double zeta) const;
};

/// Thrown by the solvers when Newton stops without converging.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, NewtonReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const NewtonReport& report() const { return report_; }

 private:
  NewtonReport report_;
};

}  // namespace sivie
