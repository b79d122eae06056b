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
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nnoma/config.hpp"
#include "nnoma/simulate.hpp"

namespace nnoma {

/// Groups of metrics a sweep can emit.
enum class MetricSet {
  kNomaOutage,  // typical NOMA user outage (analytic + mc)
  kCompOutage,  // fixed-rate CoMP outage, outage sum rate, thinning (mc)
  kErgodic,     // adaptive-rate ergodic rates (analytic + mc)
  kNearest,     // nearest scheme outages and outage sum rate (analytic + mc)
  kOma,         // OMA baselines (mc)
};

enum class SweepMode { kSimulate, kAnalytic, kBoth };

MetricSet parse_metric_set(std::string_view name);
std::string_view metric_set_name(MetricSet set);
SweepMode parse_sweep_mode(std::string_view name);

struct SweepSpec {
  std::string id = "sweep";
  std::string curve;      // label shared by every row of this sweep
  std::string parameter;  // a config key or a unit-converted alias (see apply_parameter)
  std::vector<double> values;
  std::vector<MetricSet> metrics;
  SweepMode mode = SweepMode::kBoth;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::vector<std::string> keep_metrics;  // empty keeps everything
};

/// Parses "a,b,c", "lin:start:stop:count" or "log:start:stop:count".
std::vector<double> parse_values(std::string_view text);

/// Sets a config key, or one of the aliases power_noma_dbm (also sets the
/// CoMP power through the unchanged ratio) and noise_density_dbm_hz.
/// Throws ConfigError on unknown names.
void apply_parameter(SystemConfig& cfg, std::string_view name, double value);

/// Same, from text, for `key=value` overrides.
void apply_override(SystemConfig& cfg, std::string_view assignment);

enum class Source { kAnalytic, kMonteCarlo };

struct ResultRow {
  std::string id;
  std::string curve;
  std::string parameter;
  double parameter_value = 0.0;
  std::string scheme;
  std::string metric;
  Source source = Source::kAnalytic;
  double value = 0.0;
  std::optional<double> std_error;  // Monte Carlo rows only
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string fingerprint;
};

struct RunOptions {
  int threads = 1;
  SimOptions sim() const { return {threads, TypicalBsMode::kPalm}; }
};

/// One row per (value, metric, source), in value order then metric order.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const SystemConfig& base,
                                 const RunOptions& opts = {});

struct PresetCurve {
  std::string label;
  std::vector<std::pair<std::string, double>> settings;  // applied to the preset base
};

struct Preset {
  std::string name;
  std::string title;
  SystemConfig base;
  std::string parameter;
  std::vector<double> values;
  std::vector<MetricSet> metrics;
  std::vector<std::string> keep_metrics;
  std::vector<PresetCurve> curves;
  std::uint64_t default_trials = 20000;
};

const std::vector<Preset>& presets();

/// Throws std::out_of_range for an unknown name.
const Preset& find_preset(std::string_view name);

struct PresetRequest {
  std::vector<std::string> overrides;  // key=value, applied after curve settings
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  SweepMode mode = SweepMode::kBoth;
};

std::vector<ResultRow> run_preset(std::string_view name, const PresetRequest& request,
                                  const RunOptions& opts = {});

/// RFC-4180 CSV with a header row; numbers as %.17g.
void write_rows_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::string rows_to_csv(const std::vector<ResultRow>& rows);

/// Quotes a field when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view text);
std::string format_number(double value);

}  // namespace nnoma
