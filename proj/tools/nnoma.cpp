/*
 * Copyright 2026 nnoma-sim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: preset, sweep and validate subcommands.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nnoma/acceptance.hpp"
#include "nnoma/config.hpp"
#include "nnoma/experiment.hpp"
#include "nnoma/pointprocess.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConfigInvalid = 3,
  kIo = 4,
  kValidationFailed = 5,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string config_path;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  int threads = 0;
  std::string out_path;
  std::vector<std::string> overrides;
  std::string mode = "both";
  std::string geometry_path;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<std::string> config_file_assignments(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::vector<std::string> out;
  for (const auto& [key, value] : nnoma::read_key_values(in)) out.push_back(key + "=" + value);
  return out;
}

/// Writes `text` to `path`, or to stdout for an empty path or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

void emit_geometry(const std::string& path, const nnoma::SystemConfig& cfg, std::uint64_t seed) {
  if (path.empty()) return;
  std::ostringstream text;
  nnoma::write_geometry_csv(text, nnoma::sample_geometry(cfg, nnoma::RandomStream(seed)));
  emit(path, text.str());
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "key=value config file");
  cmd->add_option("--seed", args.seed, "Monte Carlo seed");
  cmd->add_option("--trials", args.trials, "Monte Carlo trials per point")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", args.out_path, "output CSV path (default stdout)");
  cmd->add_option("--override", args.overrides, "key=value, repeatable")->take_all();
  cmd->add_option("--mode", args.mode, "simulate | analytic | both")
      ->check(CLI::IsMember({"simulate", "analytic", "both"}));
  cmd->add_option("--geometry-out", args.geometry_path,
                  "write one network realization (cluster_id,role,x,y) for debugging");
}

int run_preset_cmd(const CommonArgs& args, const std::string& name) {
  const auto& preset = [&]() -> const nnoma::Preset& {
    try {
      return nnoma::find_preset(name);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }();
  nnoma::PresetRequest request;
  request.overrides = config_file_assignments(args.config_path);
  request.overrides.insert(request.overrides.end(), args.overrides.begin(), args.overrides.end());
  request.trials = args.trials;
  request.seed = args.seed;
  request.mode = nnoma::parse_sweep_mode(args.mode);
  const auto rows = nnoma::run_preset(name, request, {resolve_threads(args.threads)});
  emit(args.out_path, nnoma::rows_to_csv(rows));
  if (!args.geometry_path.empty()) {
    auto cfg = preset.base;
    for (const auto& [key, value] : preset.curves.front().settings) {
      nnoma::apply_parameter(cfg, key, value);
    }
    for (const auto& o : request.overrides) nnoma::apply_override(cfg, o);
    nnoma::apply_parameter(cfg, preset.parameter, preset.values.front());
    emit_geometry(args.geometry_path, cfg, args.seed);
  }
  return kOk;
}

struct SweepArgs {
  std::string id = "sweep";
  std::string parameter;
  std::string values;
  std::vector<std::string> metrics;
  std::vector<std::string> keep;
};

int run_sweep_cmd(const CommonArgs& args, const SweepArgs& sweep) {
  nnoma::SystemConfig base;
  for (const auto& a : config_file_assignments(args.config_path)) nnoma::apply_override(base, a);
  for (const auto& o : args.overrides) nnoma::apply_override(base, o);
  nnoma::SweepSpec spec;
  spec.id = sweep.id;
  spec.parameter = sweep.parameter;
  spec.values = nnoma::parse_values(sweep.values);
  for (const auto& m : sweep.metrics) {
    try {
      spec.metrics.push_back(nnoma::parse_metric_set(m));
    } catch (const nnoma::ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  spec.mode = nnoma::parse_sweep_mode(args.mode);
  if (args.trials) spec.trials = *args.trials;
  spec.seed = args.seed;
  spec.keep_metrics = sweep.keep;
  const auto rows = nnoma::run_sweep(spec, base, {resolve_threads(args.threads)});
  emit(args.out_path, nnoma::rows_to_csv(rows));
  if (!args.geometry_path.empty()) {
    auto cfg = base;
    nnoma::apply_parameter(cfg, spec.parameter, spec.values.front());
    emit_geometry(args.geometry_path, cfg, args.seed);
  }
  return kOk;
}

struct ValidateArgs {
  std::string out_path;
  int threads = 0;
  double tolerance_scale = 1.0;
  double trial_scale = 1.0;
  std::vector<int> criteria;
};

int run_validate_cmd(const ValidateArgs& args) {
  nnoma::AcceptanceOptions opts;
  opts.threads = resolve_threads(args.threads);
  opts.tolerance_scale = args.tolerance_scale;
  opts.trial_scale = args.trial_scale;
  opts.criteria.insert(args.criteria.begin(), args.criteria.end());
  const auto report = nnoma::run_acceptance(opts, [](const nnoma::AcceptanceCheck& c) {
    std::printf("%s [%d] %-48s measured=%.6g expected=%.6g tol=%.3g\n", c.pass ? "PASS" : "FAIL",
                c.criterion, c.check.c_str(), c.measured, c.expected, c.tolerance);
    std::fflush(stdout);
  });
  for (const auto& [criterion, seconds] : report.seconds) {
    std::printf("%s criterion %d (%s) %.1fs\n",
                report.criterion_passed(criterion) ? "PASS" : "FAIL", criterion,
                nnoma::acceptance_title(criterion), seconds);
  }
  if (!args.out_path.empty()) {
    std::ostringstream text;
    nnoma::write_acceptance_csv(text, report);
    emit(args.out_path, text.str());
  }
  return report.all_passed() ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network-NOMA CoMP uplink simulator and closed-form evaluator"};
  app.require_subcommand(1);

  CommonArgs preset_args;
  std::string preset_name;
  bool list_presets = false;
  auto* preset = app.add_subcommand("preset", "run a predefined figure sweep");
  preset->add_option("name", preset_name, "preset name");
  preset->add_flag("--list", list_presets, "list preset names and exit");
  add_common(preset, preset_args);

  CommonArgs sweep_args;
  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one config parameter");
  add_common(sweep_cmd, sweep_args);
  sweep_cmd->add_option("--id", sweep.id, "value of the id column");
  sweep_cmd->add_option("--param", sweep.parameter, "config key, power_noma_dbm or noise_density_dbm_hz")
      ->required();
  sweep_cmd->add_option("--values", sweep.values, "a,b,c | lin:start:stop:n | log:start:stop:n")
      ->required();
  sweep_cmd->add_option("--metrics", sweep.metrics,
                        "noma_outage, comp_outage, ergodic, nearest, oma")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--keep", sweep.keep, "metric or scheme/metric filter")->delimiter(',');

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "run the acceptance suite");
  validate->add_option("--out", validate_args.out_path, "report CSV path");
  validate->add_option("--threads", validate_args.threads, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  validate->add_option("--criteria", validate_args.criteria, "subset of criteria 1-6")
      ->delimiter(',')
      ->check(CLI::Range(1, nnoma::kAcceptanceCriteria));
  // Test hooks.
  validate->add_option("--tolerance-scale", validate_args.tolerance_scale)->group("");
  validate->add_option("--trial-scale", validate_args.trial_scale)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (preset->parsed()) {
      if (list_presets) {
        for (const auto& p : nnoma::presets()) std::cout << p.name << '\t' << p.title << '\n';
        return kOk;
      }
      if (preset_name.empty()) throw UsageError("preset name required (see --list)");
      return run_preset_cmd(preset_args, preset_name);
    }
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_args, sweep);
    return run_validate_cmd(validate_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nnoma::ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kConfigInvalid;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kConfigInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
