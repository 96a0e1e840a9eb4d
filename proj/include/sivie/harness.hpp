#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sivie/brownian.hpp"
#include "sivie/galerkin.hpp"
#include "sivie/problem.hpp"

namespace sivie {

/// One realization: solver and exact solution compared on the same path.
struct TrialResult {
  std::uint64_t seed = 0;
  std::vector<double> eval_points;
  std::vector<double> exact_values;
  std::vector<double> approx_values;
  std::vector<double> abs_errors;
  double mean_abs_error = 0.0;
  int newton_iterations = 0;
  // Max-norm of the assembled residual re-evaluated at the returned coefficients.
  double residual_norm = 0.0;
};

/// Cross-trial summary of per-trial mean absolute errors. `std` is the sample
/// standard deviation (n-1 divisor); the interval is mean +/- t std / sqrt(n).
struct TrialStats {
  int m = 0;
  int trial_count = 0;
  double mean = 0.0;
  double std = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  std::vector<std::uint64_t> seeds;
  double max_residual_norm = 0.0;
};

struct IntervalEstimate {
  double mean = 0.0;
  double std = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
};

/// Two-sided 95% Student-t critical value t_{0.975, dof} from a three-decimal
/// table for dof 1..30; 1.96 beyond.
double t_critical_975(int dof);

/// Mean, sample standard deviation and 95% t-interval of the mean. Throws
/// std::invalid_argument for fewer than two values.
IntervalEstimate t_interval(std::span<const double> values);

/// {T/10, 2T/10, ..., T}
std::vector<double> default_eval_points(double horizon_T);

/// A failed trial, with the seed needed to reproduce it.
class TrialFailure : public std::runtime_error {
 public:
  TrialFailure(std::uint64_t seed, const std::string& what)
      : std::runtime_error("trial with seed " + std::to_string(seed) + " failed: " + what), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

struct TrialRun {
  TrialResult result;
  SpectralSolution solution;
};

/// Solves `problem` with `method` on `path` and compares against the problem's
/// exact oracle at `eval_points` on the same path. For the collocation method
/// only the SolverConfig part of `cfg` is used. If Newton fails from the Z0
/// projection it is retried once from the zero vector; a second failure
/// throws TrialFailure.
TrialRun run_trial_on(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, BrownianSampler& path,
                      std::span<const double> eval_points);

/// run_trial_on with a fresh path seeded by `seed`.
TrialResult run_trial(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, std::uint64_t seed,
                      std::span<const double> eval_points);
TrialResult run_trial(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, std::uint64_t seed);

struct TrialsOptions {
  // Worker threads; trials are assigned by index so results do not depend on it.
  int workers = 1;
  // Called once per trial, in seed order, after all trials have finished.
  std::function<void(const TrialResult&)> on_trial;
};

/// Trials with seeds base_seed .. base_seed + count - 1; statistics over their
/// mean absolute errors. count must be >= 2.
TrialStats run_trials(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, std::uint64_t base_seed,
                      int count, const TrialsOptions& options = {});

/// One TrialStats per m, every m using the same seeds.
std::vector<TrialStats> convergence_sweep(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg_base,
                                          std::span<const int> ms, std::uint64_t base_seed, int count,
                                          const TrialsOptions& options = {});

}  // namespace sivie
