// fraclaw: command-line driver for fractional conservation law runs.
//
//   fraclaw run config.json [--set key=value ...] [--output-dir DIR]
//   fraclaw convergence config.json [--dx 0.1 --dx 0.05 ...] [--reference-dx 0.0015625] [--csv table.csv]
//   fraclaw validate
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclaw/errors.hpp"
#include "fraclaw/experiment/convergence.hpp"
#include "fraclaw/experiment/norms.hpp"
#include "fraclaw/experiment/presets.hpp"
#include "fraclaw/experiment/run_config.hpp"
#include "fraclaw/experiment/snapshots.hpp"
#include "fraclaw/experiment/validation.hpp"
#include "fraclaw/schemes/driver.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_dir;
  std::vector<double> dx_list;
  double reference_dx = 0.0;
  std::string csv_path;
};

fraclaw::RunConfig load(const Options& o) {
  auto overrides = o.overrides;
  if (!o.output_dir.empty()) overrides.push_back("output_dir=\"" + o.output_dir + "\"");
  return fraclaw::load_config(o.config_path, overrides);
}

int cmd_run(const Options& o) {
  const auto cfg = load(o);
  fraclaw::RunOptions ro;
  ro.output_times = cfg.snapshot_times;
  const auto traj = fraclaw::run(fraclaw::to_scheme_config(cfg), fraclaw::make_preset(cfg.preset).data, cfg.grid(), ro);
  const auto files = fraclaw::emit_snapshots(traj, cfg, cfg.output_dir);
  const auto& u = traj.final_state();
  std::printf("steps %zu  dt %.6g  t_end %.6g\n", traj.steps, traj.dt, cfg.t_end);
  std::printf("L1 %.6g  L2 %.6g  Linf %.6g  BV %.6g\n", fraclaw::norm(u, fraclaw::NormKind::l1),
              fraclaw::norm(u, fraclaw::NormKind::l2), fraclaw::norm(u, fraclaw::NormKind::linf),
              fraclaw::norm(u, fraclaw::NormKind::bv));
  for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
  return 0;
}

int cmd_convergence(const Options& o) {
  auto cfg = load(o);
  if (!o.dx_list.empty()) cfg.study_dx = o.dx_list;
  if (o.reference_dx > 0.0) cfg.reference_dx = o.reference_dx;
  if (cfg.study_dx.empty()) throw fraclaw::ConfigError("study_dx", "no dx list given (config key or --dx)");
  const auto table = fraclaw::convergence_study(cfg);
  std::cout << table.to_display();
  if (!o.csv_path.empty()) {
    std::ofstream out(o.csv_path);
    if (!out) throw std::runtime_error("cannot write " + o.csv_path);
    out << table.to_csv();
    std::printf("wrote %s\n", o.csv_path.c_str());
  }
  return 0;
}

int cmd_validate() {
  int failed = 0;
  for (const auto& r : fraclaw::run_validation_suite()) {
    std::printf("[%s] %s%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.empty() ? "" : "  ",
                r.detail.c_str());
    failed += r.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and experiment harness for fractional conservation laws"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "single simulation; writes snapshot CSVs and a gnuplot script");
  run->add_option("config", o.config_path, "JSON config file")->required()->check(CLI::ExistingFile);
  run->add_option("--set", o.overrides, "override a config key (key=value, value as JSON)");
  run->add_option("--output-dir", o.output_dir, "directory for snapshots");

  auto* conv = app.add_subcommand("convergence", "error/rate table against a fine-grid reference");
  conv->add_option("config", o.config_path, "JSON config file")->required()->check(CLI::ExistingFile);
  conv->add_option("--set", o.overrides, "override a config key (key=value, value as JSON)");
  conv->add_option("--dx", o.dx_list, "cell widths, each half the previous");
  conv->add_option("--reference-dx", o.reference_dx, "cell width of the reference run");
  conv->add_option("--csv", o.csv_path, "write the table as CSV");

  app.add_subcommand("validate", "quick property checks of operator, fluxes and schemes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(o);
    if (*conv) return cmd_convergence(o);
    return cmd_validate();
  } catch (const fraclaw::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const fraclaw::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
