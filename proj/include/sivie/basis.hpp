#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace sivie {

/// Orthonormal Chelyshkov polynomials phi*_0 .. phi*_N on [0,1] with unit
/// weight, stored as a monomial coefficient table.
///
/// Member i is
///   phi*_i(t) = sqrt(2i+1) * sum_{k=0}^{N-i} (-1)^k C(N-i,k) C(N+k+i+1,N-i) t^{k+i}
/// so its lowest power is t^i and its degree is N. The integer part of every
/// coefficient is built exactly before conversion to double; the supported
/// range is 0 <= N <= kMaxDegreeCap, where the products used by gram_matrix()
/// still fit in 128-bit integers and double evaluation stays well conditioned.
///
/// Immutable after construction, so one instance can be shared by any number
/// of readers.
class ChelyshkovBasis {
 public:
  static constexpr int kMaxDegreeCap = 12;

  /// Throws std::invalid_argument unless 0 <= degree_cap <= kMaxDegreeCap.
  explicit ChelyshkovBasis(int degree_cap);

  int degree_cap() const { return degree_cap_; }
  int size() const { return degree_cap_ + 1; }

  /// c[i][a], the coefficient of t^a in phi*_i.
  double coefficient(int i, int a) const { return coeffs_(i, a); }
  const Eigen::MatrixXd& coefficients() const { return coeffs_; }

  /// phi*_i(t) by nested multiplication. Rejects i outside [0,N] and t
  /// outside [0,1] with std::out_of_range.
  double eval(int i, double t) const;

  /// All N+1 values at t.
  Eigen::VectorXd eval_all(double t) const;

  /// sum_j h_j phi*_j(t); h must have N+1 entries.
  double linear_combination(const Eigen::VectorXd& h, double t) const;

  /// G[i][j] = sum_{a,b} c[i][a] c[j][b] / (a+b+1), the exact unit-weight
  /// inner products on [0,1]. The rational sum is accumulated over the
  /// integer coefficients, so no cancellation error enters before the final
  /// division.
  Eigen::MatrixXd gram_matrix() const;

  /// integral_0^1 phi*_i(t) dt for every i, from exact monomial moments.
  Eigen::VectorXd integrals() const;

 private:
  int degree_cap_;
  // Integer part c'[i][a] of each coefficient (without the sqrt(2i+1) factor).
  std::vector<std::vector<std::int64_t>> integer_coeffs_;
  Eigen::VectorXd scale_;
  Eigen::MatrixXd coeffs_;
};

/// Exact binomial coefficient. Throws std::overflow_error if the result does
/// not fit in 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace sivie
