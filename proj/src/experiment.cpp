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
#include "nnoma/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nnoma/analytic.hpp"

namespace nnoma {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string(what), "cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

bool same_draws(const SystemConfig& a, const SystemConfig& b) {
  return a.lambda_c == b.lambda_c && a.radius_cluster == b.radius_cluster &&
         a.radius_comp == b.radius_comp && a.k_users == b.k_users && a.alpha == b.alpha &&
         a.effective_sim_radius() == b.effective_sim_radius();
}

/// Collects rows for one sweep point while honouring the metric filter.
class RowSink {
 public:
  RowSink(const SweepSpec& spec, std::vector<ResultRow>& rows) : spec_(spec), rows_(rows) {}

  void point(double parameter_value, const SystemConfig& cfg) {
    value_ = parameter_value;
    fingerprint_ = fingerprint(cfg);
  }

  void analytic(std::string_view scheme, std::string_view metric, double value) {
    push(scheme, metric, Source::kAnalytic, value, std::nullopt);
  }

  void mc(std::string_view scheme, std::string_view metric, const MonteCarloEstimate& est) {
    push(scheme, metric, Source::kMonteCarlo, est.mean, est);
  }

  bool wants(std::string_view scheme, std::string_view metric) const {
    if (spec_.keep_metrics.empty()) return true;
    const std::string qualified = std::string(scheme) + "/" + std::string(metric);
    return std::any_of(spec_.keep_metrics.begin(), spec_.keep_metrics.end(),
                       [&](const std::string& k) { return k == metric || k == qualified; });
  }

 private:
  void push(std::string_view scheme, std::string_view metric, Source source, double value,
            const std::optional<MonteCarloEstimate>& est) {
    if (!wants(scheme, metric)) return;
    ResultRow row;
    row.id = spec_.id;
    row.curve = spec_.curve;
    row.parameter = spec_.parameter;
    row.parameter_value = value_;
    row.scheme = scheme;
    row.metric = metric;
    row.source = source;
    row.value = value;
    if (est) {
      row.std_error = est->std_error;
      row.trials = est->trials;
      row.seed = est->seed;
    }
    row.fingerprint = fingerprint_;
    rows_.push_back(std::move(row));
  }

  const SweepSpec& spec_;
  std::vector<ResultRow>& rows_;
  double value_ = 0.0;
  std::string fingerprint_;
};

MonteCarloEstimate scaled(MonteCarloEstimate est, double factor, double offset) {
  est.mean = offset + factor * est.mean;
  est.std_error *= std::abs(factor);
  return est;
}

/// Monte Carlo results for one group of configurations sharing draws.
struct GroupResults {
  std::vector<MonteCarloEstimate> noma;
  std::vector<FixedRateEstimates> fixed;
  std::vector<ErgodicEstimates> ergodic;
  std::vector<NearestEstimates> nearest;
  std::vector<OmaEstimates> oma;
};

GroupResults simulate_group(std::span<const SystemConfig> cfgs, const SweepSpec& spec,
                            const RunOptions& opts) {
  GroupResults out;
  const auto sim = opts.sim();
  for (auto set : spec.metrics) {
    switch (set) {
      case MetricSet::kNomaOutage:
        out.noma = simulate_noma_outage_batch(cfgs, spec.trials, spec.seed, sim);
        break;
      case MetricSet::kCompOutage:
        out.fixed = simulate_fixed_rate_batch(cfgs, spec.trials, spec.seed, sim);
        break;
      case MetricSet::kErgodic:
        out.ergodic = simulate_ergodic_rates_batch(cfgs, spec.trials, spec.seed, sim);
        break;
      case MetricSet::kNearest:
        out.nearest = simulate_nearest_scheme_batch(cfgs, spec.trials, spec.seed, sim);
        break;
      case MetricSet::kOma:
        out.oma = simulate_oma_baselines_batch(cfgs, spec.trials, spec.seed, sim);
        break;
    }
  }
  return out;
}

void emit_point(RowSink& sink, const SystemConfig& cfg, const SweepSpec& spec,
                const GroupResults* mc, std::size_t k) {
  const bool analytic = spec.mode != SweepMode::kSimulate;
  for (auto set : spec.metrics) {
    switch (set) {
      case MetricSet::kNomaOutage:
        if (analytic && sink.wants("n-noma", "noma_outage")) {
          sink.analytic("n-noma", "noma_outage", typical_noma_outage(cfg).value);
        }
        if (mc) sink.mc("n-noma", "noma_outage", mc->noma[k]);
        break;
      case MetricSet::kCompOutage:
        if (mc) {
          const auto& f = mc->fixed[k];
          sink.mc("n-noma", "comp_outage", f.comp_outage);
          sink.mc("n-noma", "outage_sum_rate", f.outage_sum_rate);
          sink.mc("n-noma", "qualified_fraction", f.qualified_fraction);
        }
        break;
      case MetricSet::kErgodic: {
        std::optional<double> user_rate;
        if (analytic && (sink.wants("n-noma", "noma_user_rate") ||
                         sink.wants("n-noma", "noma_sum_rate"))) {
          user_rate = typical_noma_ergodic_rate(cfg);
          sink.analytic("n-noma", "noma_user_rate", *user_rate);
        }
        if (mc) sink.mc("n-noma", "noma_user_rate", mc->ergodic[k].noma_user_rate);
        if (user_rate) sink.analytic("n-noma", "noma_sum_rate", disk_noma_sum_rate(cfg, *user_rate));
        if (mc) {
          sink.mc("n-noma", "noma_sum_rate", mc->ergodic[k].noma_sum_rate);
          sink.mc("n-noma", "comp_rate", mc->ergodic[k].comp_rate);
          sink.mc("n-noma", "system_sum_rate", mc->ergodic[k].system_sum_rate);
        }
        break;
      }
      case MetricSet::kNearest: {
        std::optional<double> p1, p2;
        if (analytic) {
          try {
            p1 = nearest_noma_outage(cfg).value;
            p2 = nearest_comp_outage(cfg).value;
          } catch (const UnsupportedExponent& e) {
            throw ConfigError("alpha", e.what());
          }
          sink.analytic("nearest", "noma_outage", *p1);
        }
        if (mc) sink.mc("nearest", "noma_outage", mc->nearest[k].noma_outage);
        if (p2) sink.analytic("nearest", "comp_outage", *p2);
        if (mc) sink.mc("nearest", "comp_outage", mc->nearest[k].comp_outage);
        if (p1 && p2) {
          sink.analytic("nearest", "outage_sum_rate",
                        (1.0 - *p1) * cfg.rate_noma + (1.0 - *p2) * cfg.rate_comp);
        }
        if (mc) sink.mc("nearest", "outage_sum_rate", mc->nearest[k].outage_sum_rate);
        break;
      }
      case MetricSet::kOma:
        if (mc) {
          const auto& o = mc->oma[k];
          sink.mc("oma", "comp_outage", o.comp_outage_oma);
          sink.mc("oma", "comp_rate", o.comp_rate_oma);
          sink.mc("oma", "outage_sum_rate", scaled(o.comp_outage_oma, -cfg.rate_comp, cfg.rate_comp));
          sink.mc("nearest-oma", "comp_outage", o.nearest_outage_oma);
          sink.mc("nearest-oma", "comp_rate", o.nearest_rate_oma);
          sink.mc("nearest-oma", "outage_sum_rate",
                  scaled(o.nearest_outage_oma, -cfg.rate_comp, cfg.rate_comp));
        }
        break;
    }
  }
}

std::vector<double> power_grid_dbm() {
  std::vector<double> grid;
  for (int dbm = 10; dbm <= 40; dbm += 2) grid.push_back(dbm);
  return grid;
}

std::vector<double> rate_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.25 * i);
  return grid;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> table;
  const auto power = power_grid_dbm();

  // Typical NOMA user outage versus target rate for K = 1, 2, 3.
  {
    Preset p;
    p.name = "fig2";
    p.title = "NOMA-user outage versus target rate";
    p.base.radius_cluster = 50.0;
    p.base.lambda_c = 2e-5;
    p.base.power_noma = 0.1;
    p.base.power_ratio = 10.0;
    p.base.cheb_order = 20;
    p.base.radius_comp = 500.0;
    p.parameter = "rate_noma";
    p.values = rate_grid();
    p.metrics = {MetricSet::kNomaOutage};
    p.curves = {{"K=1", {{"k_users", 1}}}, {"K=2", {{"k_users", 2}}}, {"K=3", {{"k_users", 3}}}};
    table.push_back(p);
  }
  // NOMA-user outage versus transmit power, K = 2, rate 1 BPCU.
  {
    Preset p;
    p.name = "fig3";
    p.title = "NOMA-user outage versus transmit power";
    p.base.k_users = 2;
    p.base.rate_noma = 1.0;
    p.base.lambda_c = 2e-5;
    p.base.radius_comp = 500.0;
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kNomaOutage};
    for (double phi : {10.0, 20.0}) {
      for (double rc : {50.0, 100.0}) {
        char label[64];
        std::snprintf(label, sizeof label, "phi=%g;radius_cluster=%g", phi, rc);
        p.curves.push_back({label, {{"power_ratio", phi}, {"radius_cluster", rc}}});
      }
    }
    table.push_back(p);
  }
  // Ergodic rate of a typical NOMA user (a) and NOMA sum rate in the disk (b)
  // versus BS density; R_c = 80 m, phi = 10, N = 20, R_D = 200 m.
  for (const char* which : {"fig4a", "fig4b"}) {
    Preset p;
    p.name = which;
    p.title = which[4] == 'a' ? "Ergodic rate of a typical NOMA user versus density"
                              : "Ergodic sum rate of NOMA users in the disk versus density";
    p.base.radius_cluster = 80.0;
    p.base.power_ratio = 10.0;
    p.base.radius_comp = 200.0;
    p.base.cheb_order = 20;
    p.parameter = "lambda_c";
    p.values = {1e-5, 2e-5, 3e-5, 4e-5, 5e-5};
    p.metrics = {MetricSet::kErgodic};
    p.keep_metrics = {which[4] == 'a' ? "noma_user_rate" : "noma_sum_rate"};
    p.curves = {{"K=1", {{"k_users", 1}}}, {"K=2", {{"k_users", 2}}}, {"K=3", {{"k_users", 3}}}};
    table.push_back(p);
  }
  // CoMP-user outage versus power; R_D = 300 m, R_c = 40 m, phi = 20, K = 3,
  // CoMP rate 1 BPCU.
  {
    Preset p;
    p.name = "fig5";
    p.title = "CoMP-user outage versus transmit power";
    p.base.radius_comp = 300.0;
    p.base.radius_cluster = 40.0;
    p.base.power_ratio = 20.0;
    p.base.k_users = 3;
    p.base.rate_comp = 1.0;
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kCompOutage};
    p.keep_metrics = {"comp_outage"};
    for (double rate : {0.5, 1.5}) {
      for (double lambda : {1e-5, 3e-5}) {
        char label[64];
        std::snprintf(label, sizeof label, "rate_noma=%g;lambda_c=%g", rate, lambda);
        p.curves.push_back({label, {{"rate_noma", rate}, {"lambda_c", lambda}}});
      }
    }
    table.push_back(p);
  }
  // N-NOMA versus OMA outage sum rate; K = 3, NOMA rate 0.5, CoMP rate 3,
  // lambda = 3e-5, R_c = 40 m, R_D = 300 m. Both users transmit at the same
  // power, so phi = 1.
  {
    Preset p;
    p.name = "fig6";
    p.title = "Outage sum rate, N-NOMA versus OMA";
    p.base.k_users = 3;
    p.base.rate_noma = 0.5;
    p.base.rate_comp = 3.0;
    p.base.lambda_c = 3e-5;
    p.base.radius_cluster = 40.0;
    p.base.radius_comp = 300.0;
    p.base.power_ratio = 1.0;
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kCompOutage, MetricSet::kOma};
    p.keep_metrics = {"n-noma/comp_outage", "n-noma/outage_sum_rate", "oma/comp_outage",
                      "oma/outage_sum_rate"};
    p.curves = {{"K=3", {}}};
    table.push_back(p);
  }
  // N-NOMA versus OMA ergodic sum rate; K = 2, phi = 10, R_c = 80 m,
  // R_D = 200 m. The density is not given for this comparison; 3e-5 is used.
  {
    Preset p;
    p.name = "fig7";
    p.title = "Ergodic sum rate, N-NOMA versus OMA";
    p.base.k_users = 2;
    p.base.power_ratio = 10.0;
    p.base.radius_cluster = 80.0;
    p.base.radius_comp = 200.0;
    p.base.lambda_c = 3e-5;
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kErgodic, MetricSet::kOma};
    p.keep_metrics = {"n-noma/noma_sum_rate", "n-noma/comp_rate", "n-noma/system_sum_rate",
                      "oma/comp_rate"};
    p.curves = {{"K=2", {}}};
    table.push_back(p);
  }
  // Nearest scheme outages; K = 3, R_c = 30 m, lambda = 3e-5, both rates
  // 0.5 BPCU. The disk plays no role; the window is fixed at 2 km.
  const auto nearest_base = [] {
    SystemConfig c;
    c.k_users = 3;
    c.radius_cluster = 30.0;
    c.lambda_c = 3e-5;
    c.rate_noma = 0.5;
    c.rate_comp = 0.5;
    c.power_ratio = 10.0;
    c.sim_radius = 2000.0;
    return c;
  };
  {
    Preset p;
    p.name = "fig8a";
    p.title = "Nearest scheme outage versus power, phi = 10 and 20";
    p.base = nearest_base();
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kNearest};
    p.keep_metrics = {"noma_outage", "comp_outage"};
    p.curves = {{"phi=10", {{"power_ratio", 10.0}}}, {"phi=20", {{"power_ratio", 20.0}}}};
    table.push_back(p);
  }
  {
    Preset p;
    p.name = "fig8b";
    p.title = "Nearest scheme outage versus power, NOMA rate 0.5 and 1";
    p.base = nearest_base();
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kNearest};
    p.keep_metrics = {"noma_outage", "comp_outage"};
    p.curves = {{"rate_noma=0.5", {{"rate_noma", 0.5}}}, {"rate_noma=1", {{"rate_noma", 1.0}}}};
    table.push_back(p);
  }
  // Nearest N-NOMA versus nearest OMA outage sum rate, K = 1, 2, 3.
  {
    Preset p;
    p.name = "fig9";
    p.title = "Outage sum rate, nearest N-NOMA versus OMA";
    p.base = nearest_base();
    p.parameter = "power_noma_dbm";
    p.values = power;
    p.metrics = {MetricSet::kNearest, MetricSet::kOma};
    p.keep_metrics = {"nearest/outage_sum_rate", "nearest-oma/outage_sum_rate"};
    p.curves = {{"K=1", {{"k_users", 1}}}, {"K=2", {{"k_users", 2}}}, {"K=3", {{"k_users", 3}}}};
    table.push_back(p);
  }
  return table;
}

}  // namespace

MetricSet parse_metric_set(std::string_view name) {
  if (name == "noma_outage") return MetricSet::kNomaOutage;
  if (name == "comp_outage") return MetricSet::kCompOutage;
  if (name == "ergodic") return MetricSet::kErgodic;
  if (name == "nearest") return MetricSet::kNearest;
  if (name == "oma") return MetricSet::kOma;
  throw std::invalid_argument("unknown metric set '" + std::string(name) +
                              "' (noma_outage, comp_outage, ergodic, nearest, oma)");
}

std::string_view metric_set_name(MetricSet set) {
  switch (set) {
    case MetricSet::kNomaOutage: return "noma_outage";
    case MetricSet::kCompOutage: return "comp_outage";
    case MetricSet::kErgodic: return "ergodic";
    case MetricSet::kNearest: return "nearest";
    case MetricSet::kOma: return "oma";
  }
  return "?";
}

SweepMode parse_sweep_mode(std::string_view name) {
  if (name == "simulate") return SweepMode::kSimulate;
  if (name == "analytic") return SweepMode::kAnalytic;
  if (name == "both") return SweepMode::kBoth;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (simulate, analytic, both)");
}

std::vector<double> parse_values(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ConfigError("values", "empty value list");
  if (text.starts_with("lin:") || text.starts_with("log:")) {
    const auto parts = split(text.substr(4), ':');
    if (parts.size() != 3) throw ConfigError("values", "expected lin|log:start:stop:count");
    const double start = parse_number(parts[0], "values");
    const double stop = parse_number(parts[1], "values");
    const double count_d = parse_number(parts[2], "values");
    const auto count = static_cast<int>(count_d);
    if (count < 1 || count != count_d) throw ConfigError("values", "count must be a positive integer");
    const bool log_spaced = text.starts_with("log:");
    if (log_spaced && !(start > 0.0 && stop > 0.0)) {
      throw ConfigError("values", "log range needs positive endpoints");
    }
    std::vector<double> values;
    for (int i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      values.push_back(log_spaced ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                  : start + t * (stop - start));
    }
    return values;
  }
  std::vector<double> values;
  for (auto part : split(text, ',')) values.push_back(parse_number(part, "values"));
  return values;
}

void apply_parameter(SystemConfig& cfg, std::string_view name, double value) {
  if (name == "power_noma_dbm") {
    cfg.power_noma = dbm_to_watts(value);
  } else if (name == "noise_density_dbm_hz") {
    cfg.noise_density = dbm_to_watts(value);
  } else if (name == "k_users" || name == "cheb_order") {
    if (value != std::floor(value)) throw ConfigError(std::string(name), "must be an integer");
    set_field(cfg, name, std::to_string(static_cast<long long>(value)));
  } else {
    set_field(cfg, name, format_number(value));
  }
}

void apply_override(SystemConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError(std::string(assignment), "expected key=value");
  const auto key = trim(assignment.substr(0, eq));
  const auto value = trim(assignment.substr(eq + 1));
  if (key == "power_noma_dbm" || key == "noise_density_dbm_hz") {
    apply_parameter(cfg, key, parse_number(value, key));
  } else {
    set_field(cfg, key, value);
  }
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const SystemConfig& base,
                                 const RunOptions& opts) {
  if (spec.values.empty()) throw ConfigError("values", "empty value list");
  if (spec.metrics.empty()) throw ConfigError("metrics", "no metric set requested");
  if (spec.trials == 0) throw ConfigError("trials", "must be at least 1");
  std::vector<SystemConfig> cfgs;
  for (double v : spec.values) {
    auto cfg = base;
    apply_parameter(cfg, spec.parameter, v);
    validate(cfg);
    cfgs.push_back(cfg);
  }

  // Consecutive points that draw identical networks share one batch run.
  std::vector<GroupResults> groups;
  std::vector<std::pair<std::size_t, std::size_t>> where(cfgs.size());  // (group, index)
  if (spec.mode != SweepMode::kAnalytic) {
    std::size_t first = 0;
    while (first < cfgs.size()) {
      std::size_t last = first + 1;
      while (last < cfgs.size() && same_draws(cfgs[first], cfgs[last])) ++last;
      groups.push_back(simulate_group({cfgs.data() + first, last - first}, spec, opts));
      for (auto i = first; i < last; ++i) where[i] = {groups.size() - 1, i - first};
      first = last;
    }
  }

  std::vector<ResultRow> rows;
  RowSink sink(spec, rows);
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    sink.point(spec.values[i], cfgs[i]);
    const GroupResults* mc = groups.empty() ? nullptr : &groups[where[i].first];
    emit_point(sink, cfgs[i], spec, mc, where[i].second);
  }
  return rows;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = build_presets();
  return table;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("unknown preset '" + std::string(name) + "'");
}

std::vector<ResultRow> run_preset(std::string_view name, const PresetRequest& request,
                                  const RunOptions& opts) {
  const auto& preset = find_preset(name);
  std::vector<ResultRow> rows;
  for (const auto& curve : preset.curves) {
    auto cfg = preset.base;
    for (const auto& [key, value] : curve.settings) apply_parameter(cfg, key, value);
    for (const auto& o : request.overrides) apply_override(cfg, o);
    SweepSpec spec;
    spec.id = preset.name;
    spec.curve = curve.label;
    spec.parameter = preset.parameter;
    spec.values = preset.values;
    spec.metrics = preset.metrics;
    spec.mode = request.mode;
    spec.trials = request.trials.value_or(preset.default_trials);
    spec.seed = request.seed;
    spec.keep_metrics = preset.keep_metrics;
    auto part = run_sweep(spec, cfg, opts);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void write_rows_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  // RFC 4180 records end in CRLF.
  constexpr const char* kEol = "\r\n";
  out << "id,curve,parameter,parameter_value,scheme,metric,source,value,std_error,trials,seed,"
         "fingerprint"
      << kEol;
  for (const auto& r : rows) {
    out << csv_field(r.id) << ',' << csv_field(r.curve) << ',' << csv_field(r.parameter) << ','
        << format_number(r.parameter_value) << ',' << csv_field(r.scheme) << ','
        << csv_field(r.metric) << ',' << (r.source == Source::kAnalytic ? "analytic" : "mc") << ','
        << format_number(r.value) << ',' << (r.std_error ? format_number(*r.std_error) : "")
        << ',' << (r.trials ? std::to_string(*r.trials) : "") << ','
        << (r.seed ? std::to_string(*r.seed) : "") << ',' << csv_field(r.fingerprint) << kEol;
  }
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_rows_csv(out, rows);
  return out.str();
}

}  // namespace nnoma
