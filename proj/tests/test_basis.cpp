#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "sivie/basis.hpp"
#include "sivie/quadrature.hpp"

using sivie::ChelyshkovBasis;

namespace {

double max_deviation_from_identity(const Eigen::MatrixXd& g) {
  return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Basis, DegreeZeroIsTheConstantOne) {
  ChelyshkovBasis b(0);
  EXPECT_EQ(b.size(), 1);
  EXPECT_DOUBLE_EQ(b.coefficient(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(b.eval_all(0.5)(0), 1.0);
}

TEST(Basis, DegreeOneMatchesHandExpansion) {
  // phi*_0 = 2 - 3t (int_0^1 (2-3t)^2 = 4 - 6 + 3 = 1), phi*_1 = sqrt(3) t.
  ChelyshkovBasis b(1);
  EXPECT_DOUBLE_EQ(b.coefficient(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(b.coefficient(0, 1), -3.0);
  EXPECT_DOUBLE_EQ(b.coefficient(1, 0), 0.0);
  EXPECT_NEAR(b.coefficient(1, 1), std::sqrt(3.0), 1e-15);
}

TEST(Basis, TopMemberOfDegreeTwo) {
  ChelyshkovBasis b(2);
  EXPECT_EQ(b.coefficient(2, 0), 0.0);
  EXPECT_EQ(b.coefficient(2, 1), 0.0);
  EXPECT_NEAR(b.coefficient(2, 2), std::sqrt(5.0), 1e-15);
}

TEST(Basis, EvalExamples) {
  ChelyshkovBasis b1(1);
  EXPECT_NEAR(b1.eval(1, 1.0), 1.7320508075688772, 1e-15);
  EXPECT_NEAR(b1.eval(0, 2.0 / 3.0), 0.0, 1e-15);
  for (int n = 0; n <= ChelyshkovBasis::kMaxDegreeCap; ++n) {
    ChelyshkovBasis b(n);
    EXPECT_EQ(b.eval(0, 0.0), b.coefficient(0, 0)) << "N=" << n;
  }
}

TEST(Basis, EvalAllExamples) {
  ChelyshkovBasis b1(1);
  const Eigen::VectorXd at0 = b1.eval_all(0.0);
  EXPECT_DOUBLE_EQ(at0(0), 2.0);
  EXPECT_DOUBLE_EQ(at0(1), 0.0);
  const Eigen::VectorXd at1 = b1.eval_all(1.0);
  EXPECT_NEAR(at1(0), -1.0, 1e-15);
  EXPECT_NEAR(at1(1), std::sqrt(3.0), 1e-15);
  EXPECT_DOUBLE_EQ(ChelyshkovBasis(0).eval_all(0.5)(0), 1.0);
}

TEST(Basis, GramMatrixExamples) {
  EXPECT_DOUBLE_EQ(ChelyshkovBasis(0).gram_matrix()(0, 0), 1.0);
  EXPECT_LE(max_deviation_from_identity(ChelyshkovBasis(1).gram_matrix()), 1e-12);
  EXPECT_LE(max_deviation_from_identity(ChelyshkovBasis(8).gram_matrix()), 1e-8);
}

TEST(Basis, OrthonormalAcrossSupportedRange) {
  for (int n = 0; n <= ChelyshkovBasis::kMaxDegreeCap; ++n) {
    const double dev = max_deviation_from_identity(ChelyshkovBasis(n).gram_matrix());
    if (n <= 6) EXPECT_LE(dev, 1e-10) << "N=" << n;
    if (n <= 10) EXPECT_LE(dev, 1e-8) << "N=" << n;
    EXPECT_LE(dev, 1e-8) << "N=" << n;
  }
}

TEST(Basis, DegreeStructure) {
  for (int n = 0; n <= ChelyshkovBasis::kMaxDegreeCap; ++n) {
    ChelyshkovBasis b(n);
    for (int i = 0; i <= n; ++i) {
      for (int a = 0; a < i; ++a) EXPECT_EQ(b.coefficient(i, a), 0.0);
      EXPECT_NE(b.coefficient(i, i), 0.0);
      if (i < n) EXPECT_NE(b.coefficient(i, n), 0.0);
    }
  }
}

TEST(Basis, TopIndexClosedForm) {
  for (int n = 0; n <= 10; ++n) {
    ChelyshkovBasis b(n);
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      EXPECT_NEAR(b.eval(n, t), std::sqrt(2.0 * n + 1.0) * std::pow(t, n), 1e-12) << "N=" << n << " t=" << t;
    }
  }
}

TEST(Basis, GramAgreesWithGaussLegendre) {
  // Products phi*_i phi*_j have degree 2N; an (N+1)-point rule is exact through 2N+1.
  for (int n = 0; n <= 8; ++n) {
    ChelyshkovBasis b(n);
    const Eigen::MatrixXd g = b.gram_matrix();
    const auto rule = sivie::gauss_legendre(n + 1);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const double q = sivie::integrate([&](double t) { return b.eval(i, t) * b.eval(j, t); }, 0.0, 1.0, rule);
        EXPECT_NEAR(q, g(i, j), 1e-10) << "N=" << n << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(Basis, IntegralsOfDegreeOne) {
  const Eigen::VectorXd m = ChelyshkovBasis(1).integrals();
  EXPECT_NEAR(m(0), 0.5, 1e-15);
  EXPECT_NEAR(m(1), std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(Basis, IntegralsAgreeWithQuadrature) {
  for (int n = 0; n <= 8; ++n) {
    ChelyshkovBasis b(n);
    const Eigen::VectorXd m = b.integrals();
    const auto rule = sivie::gauss_legendre(n + 1);
    for (int i = 0; i <= n; ++i) {
      EXPECT_NEAR(sivie::integrate([&](double t) { return b.eval(i, t); }, 0.0, 1.0, rule), m(i), 1e-10);
    }
  }
}

TEST(Basis, LinearCombinationExamples) {
  ChelyshkovBasis b(3);
  for (int i = 0; i <= 3; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
    e(i) = 1.0;
    EXPECT_DOUBLE_EQ(b.linear_combination(e, 0.3), b.eval(i, 0.3));
  }
  EXPECT_EQ(b.linear_combination(Eigen::VectorXd::Zero(4), 0.7), 0.0);
  EXPECT_DOUBLE_EQ(ChelyshkovBasis(1).linear_combination(Eigen::Vector2d(1.0, 1.0), 0.0), 2.0);
}

TEST(Basis, LinearCombinationIsLinear) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 9;
    ChelyshkovBasis b(n);
    Eigen::VectorXd h1(n + 1);
    Eigen::VectorXd h2(n + 1);
    for (int j = 0; j <= n; ++j) {
      h1(j) = coef(rng);
      h2(j) = coef(rng);
    }
    const double t = unit(rng);
    EXPECT_NEAR(b.linear_combination(h1 + h2, t), b.linear_combination(h1, t) + b.linear_combination(h2, t), 1e-12);
  }
}

TEST(Basis, RejectsInvalidInput) {
  EXPECT_THROW(ChelyshkovBasis(-1), std::invalid_argument);
  EXPECT_THROW(ChelyshkovBasis(ChelyshkovBasis::kMaxDegreeCap + 1), std::invalid_argument);
  ChelyshkovBasis b(2);
  EXPECT_THROW(b.eval(3, 0.5), std::out_of_range);
  EXPECT_THROW(b.eval(-1, 0.5), std::out_of_range);
  EXPECT_THROW(b.eval(0, -0.01), std::out_of_range);
  EXPECT_THROW(b.eval(0, 1.01), std::out_of_range);
  EXPECT_THROW(b.eval_all(2.0), std::out_of_range);
  EXPECT_THROW(b.linear_combination(Eigen::VectorXd::Zero(2), 0.5), std::invalid_argument);
}

TEST(Binomial, SmallValuesAndOverflow) {
  EXPECT_EQ(sivie::binomial(5, 2), 10u);
  EXPECT_EQ(sivie::binomial(25, 12), 5200300u);
  EXPECT_EQ(sivie::binomial(3, 5), 0u);
  EXPECT_EQ(sivie::binomial(66, 33), 7219428434016265740u);
  EXPECT_THROW(sivie::binomial(70, 35), std::overflow_error);
}
