#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "sivie/quadrature.hpp"

using sivie::gauss_legendre;
using sivie::integrate;

namespace {

// Legendre P_n(x) by the Bonnet recurrence, written independently of the library.
double legendre_p(int n, double x) {
  double prev = 1.0;
  double cur = x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1) * x * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1) for |x| < 1.
double legendre_dp(int n, double x) {
  return n * (x * legendre_p(n, x) - legendre_p(n - 1, x)) / (x * x - 1.0);
}

}  // namespace

TEST(GaussLegendre, ClosedFormsForSmallOrders) {
  const auto r1 = gauss_legendre(1);
  ASSERT_EQ(r1.nodes.size(), 1u);
  EXPECT_EQ(r1.nodes[0], 0.0);
  EXPECT_DOUBLE_EQ(r1.weights[0], 2.0);

  const auto r2 = gauss_legendre(2);
  EXPECT_NEAR(r2.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r2.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(r2.weights[1], 1.0, 1e-15);

  const auto r3 = gauss_legendre(3);
  EXPECT_NEAR(r3.nodes[0], -std::sqrt(0.6), 1e-15);
  EXPECT_EQ(r3.nodes[1], 0.0);
  EXPECT_NEAR(r3.nodes[2], std::sqrt(0.6), 1e-15);
  EXPECT_NEAR(r3.weights[0], 5.0 / 9.0, 1e-15);
  EXPECT_NEAR(r3.weights[1], 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(r3.weights[2], 5.0 / 9.0, 1e-15);
}

TEST(GaussLegendre, StructuralInvariants) {
  for (int n = 1; n <= sivie::kMaxGaussOrder; ++n) {
    const auto rule = gauss_legendre(n);
    ASSERT_EQ(rule.order, n);
    double wsum = 0.0;
    for (int r = 0; r < n; ++r) {
      EXPECT_GT(rule.weights[r], 0.0);
      EXPECT_GT(rule.nodes[r], -1.0);
      EXPECT_LT(rule.nodes[r], 1.0);
      if (r > 0) EXPECT_LT(rule.nodes[r - 1], rule.nodes[r]);
      EXPECT_NEAR(rule.nodes[r], -rule.nodes[n - 1 - r], 1e-14);
      // One Newton correction away from the root of P_n.
      const double x = rule.nodes[r];
      EXPECT_LE(std::abs(legendre_p(n, x) / legendre_dp(n, x)), 1e-15) << "n=" << n << " r=" << r;
      wsum += rule.weights[r];
    }
    EXPECT_NEAR(wsum, 2.0, 1e-13) << "n=" << n;
  }
}

TEST(GaussLegendre, MonomialExactness) {
  for (int n = 2; n <= 12; ++n) {
    const auto rule = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      const double q = integrate([d](double t) { return std::pow(t, d); }, 0.0, 1.0, rule);
      EXPECT_NEAR(q, 1.0 / (d + 1), 1e-13) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Integrate, Examples) {
  const auto r4 = gauss_legendre(4);
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 0.0, 0.37, r4), 0.37, 1e-15);
  EXPECT_DOUBLE_EQ(integrate([](double t) { return t * t * t; }, 0.0, 1.0, gauss_legendre(2)), 0.25);
  EXPECT_NEAR(integrate([](double t) { return std::exp(t); }, 0.0, 1.0, gauss_legendre(8)), std::numbers::e - 1.0,
              1e-12);
}

TEST(Integrate, AffineConsistency) {
  const auto rule = gauss_legendre(10);
  auto f = [](double t) { return std::sin(3.0 * t) + t * t; };
  for (double zeta : {0.1, 0.5, 1.0, 2.5}) {
    const double direct = integrate(f, 0.0, zeta, rule);
    const double scaled = zeta * integrate([&](double u) { return f(zeta * u); }, 0.0, 1.0, rule);
    EXPECT_NEAR(direct, scaled, 1e-13);
  }
}

TEST(GaussLegendre, RejectsInvalidOrders) {
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
  EXPECT_THROW(gauss_legendre(sivie::kMaxGaussOrder + 1), std::invalid_argument);
  EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 0.0, gauss_legendre(2)), std::invalid_argument);
}
