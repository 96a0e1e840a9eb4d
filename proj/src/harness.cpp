#include "sivie/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>

#include "sivie/collocation.hpp"

namespace sivie {
namespace {

constexpr std::array<double, 30> kT975 = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
};

SpectralSolution solve(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, BrownianSampler& path,
                       const std::optional<Eigen::VectorXd>& guess) {
  if (method == Method::kCollocation) return solve_ocsc(problem, cfg, path, guess);
  return solve_ocsg(problem, cfg, path, guess);
}

double assembled_residual_norm(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg,
                               BrownianSampler& path, const Eigen::VectorXd& h) {
  const Eigen::VectorXd r =
      method == Method::kCollocation ? residual_ocsc(problem, cfg, path, h) : residual_ocsg(problem, cfg, path, h);
  return r.cwiseAbs().maxCoeff();
}

}  // namespace

double t_critical_975(int dof) {
  if (dof < 1) throw std::invalid_argument("t critical value needs at least one degree of freedom");
  if (dof <= static_cast<int>(kT975.size())) return kT975[dof - 1];
  return 1.96;
}

IntervalEstimate t_interval(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("t_interval needs at least two values");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  const double half_width = t_critical_975(static_cast<int>(values.size()) - 1) * sd / std::sqrt(n);
  return {mean, sd, mean - half_width, mean + half_width};
}

std::vector<double> default_eval_points(double horizon_T) {
  std::vector<double> pts(10);
  for (int k = 1; k <= 10; ++k) pts[k - 1] = horizon_T * k / 10.0;
  return pts;
}

TrialRun run_trial_on(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, BrownianSampler& path,
                      std::span<const double> eval_points) {
  if (!problem.exact) throw TrialFailure(path.seed(), "problem '" + problem.name + "' has no exact solution");
  std::optional<SpectralSolution> solution;
  try {
    solution = solve(problem, method, cfg, path, std::nullopt);
  } catch (const ConvergenceError& first) {
    try {
      solution = solve(problem, method, cfg, path, Eigen::VectorXd::Zero(cfg.m + 1));
    } catch (const ConvergenceError& second) {
      throw TrialFailure(path.seed(), std::string(first.what()) + "; retry from zero: " + second.what());
    }
  }

  TrialRun run{TrialResult{}, std::move(*solution)};
  TrialResult& res = run.result;
  res.seed = path.seed();
  res.newton_iterations = run.solution.report.iterations;
  // Reassembling touches only already-memoized times, so the path is unchanged.
  res.residual_norm = assembled_residual_norm(problem, method, cfg, path, run.solution.h);
  res.eval_points.assign(eval_points.begin(), eval_points.end());
  for (double zeta : eval_points) {
    double exact;
    try {
      exact = problem.exact(path, zeta);
    } catch (const std::exception& e) {
      throw TrialFailure(path.seed(), e.what());
    }
    const double approx = run.solution.evaluate(zeta);
    res.exact_values.push_back(exact);
    res.approx_values.push_back(approx);
    res.abs_errors.push_back(std::abs(exact - approx));
  }
  res.mean_abs_error = res.abs_errors.empty()
                           ? 0.0
                           : std::accumulate(res.abs_errors.begin(), res.abs_errors.end(), 0.0) /
                                 static_cast<double>(res.abs_errors.size());
  return run;
}

TrialResult run_trial(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, std::uint64_t seed,
                      std::span<const double> eval_points) {
  BrownianSampler path(seed);
  return run_trial_on(problem, method, cfg, path, eval_points).result;
}

TrialResult run_trial(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, std::uint64_t seed) {
  const auto pts = default_eval_points(cfg.horizon_T);
  return run_trial(problem, method, cfg, seed, pts);
}

TrialStats run_trials(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg, std::uint64_t base_seed,
                      int count, const TrialsOptions& options) {
  if (count < 2) throw std::invalid_argument("run_trials needs count >= 2");
  validate(cfg);
  const auto pts = default_eval_points(cfg.horizon_T);

  std::vector<std::optional<TrialResult>> results(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](int worker, int stride) {
    for (int i = worker; i < count; i += stride) {
      try {
        results[i] = run_trial(problem, method, cfg, base_seed + static_cast<std::uint64_t>(i), pts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(options.workers, 1, count);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TrialStats stats;
  stats.m = cfg.m;
  stats.trial_count = count;
  std::vector<double> errors_per_trial;
  for (const auto& r : results) {
    stats.seeds.push_back(r->seed);
    stats.max_residual_norm = std::max(stats.max_residual_norm, r->residual_norm);
    errors_per_trial.push_back(r->mean_abs_error);
    if (options.on_trial) options.on_trial(*r);
  }
  const IntervalEstimate est = t_interval(errors_per_trial);
  stats.mean = est.mean;
  stats.std = est.std;
  stats.ci_lower = est.ci_lower;
  stats.ci_upper = est.ci_upper;
  return stats;
}

std::vector<TrialStats> convergence_sweep(const ProblemSpec& problem, Method method, const GalerkinConfig& cfg_base,
                                          std::span<const int> ms, std::uint64_t base_seed, int count,
                                          const TrialsOptions& options) {
  if (ms.empty()) throw std::invalid_argument("convergence_sweep needs at least one m");
  std::vector<TrialStats> out;
  for (int m : ms) {
    GalerkinConfig cfg = cfg_base;
    cfg.m = m;
    out.push_back(run_trials(problem, method, cfg, base_seed, count, options));
  }
  return out;
}

}  // namespace sivie
