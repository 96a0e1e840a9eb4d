// Magnitude bands for the stochastic benchmarks. Only bands are checked: the
// reference values come from single realizations with unknown seeds.
#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "sivie/benchmarks.hpp"
#include "sivie/harness.hpp"

using sivie::GalerkinConfig;
using sivie::Method;

namespace {

constexpr std::uint64_t kSeed = 1;

}  // namespace

TEST(Problem1Bands, CollocationSingleTrialM4) {
  const auto prob = sivie::problem1(sivie::Problem1Params{});
  GalerkinConfig cfg;
  cfg.m = 4;
  const auto r = sivie::run_trial(prob, Method::kCollocation, cfg, kSeed);
  EXPECT_GE(r.mean_abs_error, 1e-4);
  EXPECT_LE(r.mean_abs_error, 2e-2);
  EXPECT_LE(*std::max_element(r.abs_errors.begin(), r.abs_errors.end()), 1e-2);
  EXPECT_GE(*std::max_element(r.abs_errors.begin(), r.abs_errors.end()), 1e-5);
}

TEST(Problem2Bands, GalerkinSingleTrialM6) {
  const auto prob = sivie::problem2(sivie::Problem2Params{});
  GalerkinConfig cfg;
  cfg.m = 6;
  const auto r = sivie::run_trial(prob, Method::kGalerkin, cfg, kSeed);
  for (double e : r.abs_errors) EXPECT_LE(e, 5e-3);
}

TEST(Problem2Bands, GalerkinSingleTrialM8) {
  const auto prob = sivie::problem2(sivie::Problem2Params{});
  GalerkinConfig cfg;
  cfg.m = 8;
  const auto r = sivie::run_trial(prob, Method::kGalerkin, cfg, kSeed);
  EXPECT_LE(r.mean_abs_error, 1e-3);
}

TEST(Problem1Bands, TenTrialMeansAtM5) {
  const auto prob = sivie::problem1(sivie::Problem1Params{});
  GalerkinConfig cfg;
  cfg.m = 5;
  for (Method method : {Method::kCollocation, Method::kGalerkin}) {
    const auto s = sivie::run_trials(prob, method, cfg, kSeed, 10);
    EXPECT_GE(s.mean, 2e-3) << sivie::to_string(method);
    EXPECT_LE(s.mean, 2e-2) << sivie::to_string(method);
  }
}

TEST(Problem1Bands, CollocationSweep) {
  const auto prob = sivie::problem1(sivie::Problem1Params{});
  const std::vector<int> ms = {3, 4, 5, 6, 7};
  const auto sweep = sivie::convergence_sweep(prob, Method::kCollocation, GalerkinConfig{}, ms, kSeed, 10);
  for (const auto& s : sweep) {
    EXPECT_GE(s.mean, 1e-3) << "m=" << s.m;
    EXPECT_LE(s.mean, 3e-2) << "m=" << s.m;
  }
}
