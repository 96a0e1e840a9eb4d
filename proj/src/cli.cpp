#include "sivie/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "plot.hpp"
#include "sivie/benchmarks.hpp"
#include "sivie/brownian.hpp"
#include "sivie/harness.hpp"
#include "sivie/quadrature.hpp"

namespace sivie::cli {
namespace {

constexpr int kCurvePoints = 51;
constexpr const char* kDescription =
    "Spectral collocation and Galerkin solvers for stochastic Ito-Volterra integral equations";

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

ProblemSpec make_problem(const RunManifest& manifest) {
  if (manifest.problem == "problem1") return problem1(Problem1Params{}, manifest.oracle_n);
  if (manifest.problem == "problem2") return problem2(Problem2Params{});
  throw std::invalid_argument("unknown problem '" + manifest.problem + "' (expected problem1 or problem2)");
}

GalerkinConfig make_config(const RunManifest& manifest, int m) {
  GalerkinConfig cfg;
  cfg.m = m;
  cfg.quad_order = manifest.quad_order;
  cfg.outer_quad_order = manifest.outer_quad_order;
  cfg.ito_n = manifest.ito_n;
  cfg.horizon_T = manifest.horizon;
  return cfg;
}

std::string trial_line(const RunManifest& manifest, int m, const TrialResult& r) {
  return manifest.problem + " " + manifest.method + " m=" + std::to_string(m) + " seed=" + std::to_string(r.seed) +
         " mean_abs_error=" + short_num(r.mean_abs_error) + " newton_iterations=" +
         std::to_string(r.newton_iterations) + " residual=" + short_num(r.residual_norm);
}

}  // namespace

void configure_app(CLI::App& app, RunManifest& manifest) {
  app.add_option("--problem", manifest.problem, "Benchmark problem: problem1 or problem2")->capture_default_str();
  app.add_option("--method", manifest.method, "Spectral method: ocsc (collocation) or ocsg (Galerkin)")
      ->capture_default_str();
  auto* m = app.add_option("--m", manifest.m, "Basis cap m (m+1 unknowns)")->capture_default_str();
  auto* sweep = app.add_option("--m-sweep", manifest.m_sweep, "Sweep m over the inclusive range a:b");
  m->excludes(sweep);
  app.add_option("--quad-order", manifest.quad_order, "Gauss-Legendre order for drift integrals")->capture_default_str();
  app.add_option("--outer-quad-order", manifest.outer_quad_order, "Gauss-Legendre order of the outer Galerkin rule")
      ->capture_default_str();
  app.add_option("--ito-n", manifest.ito_n, "Left-point subintervals per Ito sum")->capture_default_str();
  app.add_option("--oracle-n", manifest.oracle_n, "Trapezoid steps in the problem1 exact-solution oracle")
      ->capture_default_str();
  app.add_option("--horizon", manifest.horizon, "Time horizon T")->capture_default_str();
  app.add_option("--trials", manifest.trials, "Number of seeded trials per m")->capture_default_str();
  app.add_option("--seed", manifest.seed, "Base seed; trial i uses seed+i")->capture_default_str();
  app.add_option("--out-dir", manifest.out_dir, "Directory for output files")->capture_default_str();
  app.add_flag("--emit-plots", manifest.emit_plots, "Write error_curve.csv and error_curve.svg");
  app.add_flag("--dump-path", manifest.dump_path, "Write the first trial's Brownian path to brownian_path.csv");
  app.set_config("--config", "", "Read flat key = value settings from FILE (flags override it)")->type_name("FILE");
  app.get_formatter()->column_width(32);
  app.allow_config_extras(CLI::config_extras_mode::error);
}

std::string help_text() {
  CLI::App app{kDescription, "sivie"};
  RunManifest manifest;
  configure_app(app, manifest);
  return app.help();
}

std::vector<int> parse_m_sweep(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("m-sweep '" + text + "' is not of the form a:b");
  int a = 0;
  int b = 0;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    a = std::stoi(text.substr(0, colon), &used_a);
    b = std::stoi(text.substr(colon + 1), &used_b);
    if (used_a != colon || used_b != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("m-sweep '" + text + "' is not of the form a:b with integers a, b");
  }
  if (a > b) throw std::invalid_argument("m-sweep '" + text + "' has a > b");
  std::vector<int> ms;
  for (int v = a; v <= b; ++v) ms.push_back(v);
  return ms;
}

std::vector<int> requested_ms(const RunManifest& manifest) {
  if (manifest.m_sweep.empty()) return {manifest.m};
  return parse_m_sweep(manifest.m_sweep);
}

void validate(const RunManifest& manifest) {
  if (manifest.problem != "problem1" && manifest.problem != "problem2") {
    throw std::invalid_argument("unknown problem '" + manifest.problem + "' (expected problem1 or problem2)");
  }
  (void)parse_method(manifest.method);
  for (int m : requested_ms(manifest)) {
    if (m < 0 || m > ChelyshkovBasis::kMaxDegreeCap) {
      throw std::invalid_argument("m = " + std::to_string(m) + " outside [0, " +
                                  std::to_string(ChelyshkovBasis::kMaxDegreeCap) + "]");
    }
  }
  if (manifest.quad_order < 1 || manifest.quad_order > kMaxGaussOrder) {
    throw std::invalid_argument("quad-order outside [1, " + std::to_string(kMaxGaussOrder) + "]");
  }
  if (manifest.outer_quad_order < 1 || manifest.outer_quad_order > kMaxGaussOrder) {
    throw std::invalid_argument("outer-quad-order outside [1, " + std::to_string(kMaxGaussOrder) + "]");
  }
  if (manifest.ito_n < 1) throw std::invalid_argument("ito-n must be >= 1");
  if (manifest.oracle_n < 2) throw std::invalid_argument("oracle-n must be >= 2");
  if (!(manifest.horizon > 0.0) || !std::isfinite(manifest.horizon)) throw std::invalid_argument("horizon must be > 0");
  if (manifest.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (manifest.out_dir.empty()) throw std::invalid_argument("out-dir must not be empty");
}

std::string manifest_echo(const RunManifest& manifest) {
  std::ostringstream s;
  s << "# effective parameters; re-run with --config manifest.echo\n";
  s << "problem = \"" << manifest.problem << "\"\n";
  s << "method = \"" << manifest.method << "\"\n";
  if (manifest.m_sweep.empty()) {
    s << "m = " << manifest.m << "\n";
  } else {
    s << "m-sweep = \"" << manifest.m_sweep << "\"\n";
  }
  s << "quad-order = " << manifest.quad_order << "\n";
  s << "outer-quad-order = " << manifest.outer_quad_order << "\n";
  s << "ito-n = " << manifest.ito_n << "\n";
  s << "oracle-n = " << manifest.oracle_n << "\n";
  s << "horizon = " << num(manifest.horizon) << "\n";
  s << "trials = " << manifest.trials << "\n";
  s << "seed = " << manifest.seed << "\n";
  s << "out-dir = \"" << manifest.out_dir << "\"\n";
  s << "emit-plots = " << (manifest.emit_plots ? "true" : "false") << "\n";
  s << "dump-path = " << (manifest.dump_path ? "true" : "false") << "\n";
  return s.str();
}

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  ProblemSpec problem;
  Method method;
  std::vector<int> ms;
  try {
    validate(manifest);
    problem = make_problem(manifest);
    method = parse_method(manifest.method);
    ms = requested_ms(manifest);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const std::filesystem::path dir(manifest.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    err << "error: cannot create output directory " << dir.string() << ": " << ec.message() << "\n";
    return kIoError;
  }

  std::string solution_csv;
  std::string curve_csv;
  std::string curve_svg;
  std::string path_csv;
  std::string stats_csv = "m,mean,std,ci_lower,ci_upper\n";
  try {
    // Solution table, error curve and path dump all come from the first trial
    // (base seed) of the first requested m.
    {
      const GalerkinConfig cfg = make_config(manifest, ms.front());
      BrownianSampler path(manifest.seed);
      const auto pts = default_eval_points(manifest.horizon);
      TrialRun first = run_trial_on(problem, method, cfg, path, pts);
      solution_csv = "zeta,exact,approx,abs_error\n";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        solution_csv += num(pts[i]) + "," + num(first.result.exact_values[i]) + "," +
                        num(first.result.approx_values[i]) + "," + num(first.result.abs_errors[i]) + "\n";
      }
      if (manifest.emit_plots) {
        std::vector<double> zs;
        std::vector<double> errs;
        curve_csv = "zeta,exact,approx,abs_error\n";
        for (int k = 0; k < kCurvePoints; ++k) {
          const double z = (k + 1 == kCurvePoints) ? manifest.horizon : manifest.horizon * k / (kCurvePoints - 1);
          const double exact = problem.exact(path, z);
          const double approx = first.solution.evaluate(z);
          zs.push_back(z);
          errs.push_back(std::abs(exact - approx));
          curve_csv += num(z) + "," + num(exact) + "," + num(approx) + "," + num(errs.back()) + "\n";
        }
        std::ostringstream svg;
        write_error_svg(svg, zs, errs,
                        "Absolute error, " + manifest.problem + " " + manifest.method + " m=" +
                            std::to_string(ms.front()) + " seed=" + std::to_string(manifest.seed));
        curve_svg = svg.str();
      }
      if (manifest.dump_path) {
        std::ostringstream p;
        write_path_csv(path, p);
        path_csv = p.str();
      }
    }

    for (int m : ms) {
      const GalerkinConfig cfg = make_config(manifest, m);
      auto print = [&](const TrialResult& r) { out << trial_line(manifest, m, r) << "\n"; };
      if (manifest.trials >= 2) {
        const TrialStats st = run_trials(problem, method, cfg, manifest.seed, manifest.trials, {1, print});
        stats_csv += std::to_string(m) + "," + num(st.mean) + "," + num(st.std) + "," + num(st.ci_lower) + "," +
                     num(st.ci_upper) + "\n";
      } else {
        const TrialResult r = run_trial(problem, method, cfg, manifest.seed);
        print(r);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        stats_csv += std::to_string(m) + "," + num(r.mean_abs_error) + "," + num(nan) + "," + num(nan) + "," +
                     num(nan) + "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: solver failure: " << e.what() << "\n";
    return kSolverError;
  }

  try {
    write_file(dir / "solution_table.csv", solution_csv);
    write_file(dir / "stats.csv", stats_csv);
    write_file(dir / "manifest.echo", manifest_echo(manifest));
    if (manifest.emit_plots) {
      write_file(dir / "error_curve.csv", curve_csv);
      write_file(dir / "error_curve.svg", curve_svg);
    }
    if (manifest.dump_path) write_file(dir / "brownian_path.csv", path_csv);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{kDescription, "sivie"};
  RunManifest manifest;
  configure_app(app, manifest);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }
  return run(manifest, std::cout, std::cerr);
}

}  // namespace sivie::cli
