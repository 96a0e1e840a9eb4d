#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace sivie::cli {

/// Every effective parameter of one run. Defaults here are the documented
/// defaults of the command line.
struct RunManifest {
  std::string problem = "problem1";
  std::string method = "ocsc";
  int m = 4;
  std::string m_sweep;  // "a:b", empty for a single m
  int quad_order = 16;
  int outer_quad_order = 16;
  int ito_n = 1000;
  int oracle_n = 10000;
  double horizon = 1.0;
  int trials = 1;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool emit_plots = false;
  bool dump_path = false;
};

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,
  kIoError = 3,
  kSolverError = 4,
};

/// Registers every flag on `app`, bound to `manifest`.
void configure_app(CLI::App& app, RunManifest& manifest);

/// The --help text.
std::string help_text();

/// Parses "a:b" into {a, a+1, ..., b}. Throws std::invalid_argument.
std::vector<int> parse_m_sweep(const std::string& text);

/// The m values a manifest asks for.
std::vector<int> requested_ms(const RunManifest& manifest);

/// Throws std::invalid_argument naming the first invalid field.
void validate(const RunManifest& manifest);

/// Echo of the manifest in the `key = value` format accepted by --config.
std::string manifest_echo(const RunManifest& manifest);

/// Runs the experiment described by `manifest` and writes its files.
/// Progress lines go to `out`, diagnostics to `err`.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int main_entry(int argc, const char* const* argv);

}  // namespace sivie::cli
