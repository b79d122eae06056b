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
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "nnoma/config.hpp"
#include "nnoma/experiment.hpp"

using namespace nnoma;

TEST_SUITE("experiment") {
  TEST_CASE("value lists") {
    CHECK(parse_values("1, 2.5,3") == std::vector<double>{1.0, 2.5, 3.0});
    const auto lin = parse_values("lin:0:1:5");
    REQUIRE(lin.size() == 5);
    CHECK(lin[1] == 0.25);
    CHECK(lin.back() == 1.0);
    const auto lg = parse_values("log:1e-6:1e-4:3");
    CHECK(lg[1] == doctest::Approx(1e-5).epsilon(1e-12));
    CHECK(parse_values("lin:2:3:1") == std::vector<double>{2.0});
    for (const char* bad : {"", "  ", "1,,2", "abc", "lin:0:1", "lin:0:1:0", "lin:0:1:2.5",
                            "log:0:1:3", "1,nanx"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_values(bad), ConfigError);
    }
  }

  TEST_CASE("parameters and overrides") {
    SystemConfig cfg;
    const double ratio = cfg.power_ratio;
    apply_parameter(cfg, "power_noma_dbm", 30.0);
    CHECK(cfg.power_noma == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cfg.power_ratio == ratio);
    apply_parameter(cfg, "noise_density_dbm_hz", -174.0);
    CHECK(cfg.noise_density == doctest::Approx(1e-3 * std::pow(10.0, -17.4)).epsilon(1e-12));
    apply_parameter(cfg, "k_users", 4.0);
    CHECK(cfg.k_users == 4);
    CHECK_THROWS_AS(apply_parameter(cfg, "k_users", 2.5), ConfigError);
    CHECK_THROWS_AS(apply_parameter(cfg, "no_such_key", 1.0), ConfigError);
    apply_override(cfg, " lambda_c = 3e-5 ");
    CHECK(cfg.lambda_c == 3e-5);
    apply_override(cfg, "power_noma_dbm=20");
    CHECK(cfg.power_noma == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(apply_override(cfg, "lambda_c"), ConfigError);
    CHECK_THROWS_AS(apply_override(cfg, "lambda_c=abc"), ConfigError);
  }

  TEST_CASE("CSV quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("sweep rows") {
    SystemConfig base;
    base.lambda_c = 2e-5;
    base.radius_cluster = 50.0;
    base.power_noma = 0.1;
    SweepSpec spec;
    spec.id = "t";
    spec.curve = "K=1, R=50";
    spec.parameter = "rate_noma";
    spec.values = {0.5, 1.0};
    spec.metrics = {MetricSet::kNomaOutage, MetricSet::kCompOutage};
    spec.trials = 300;
    const auto rows = run_sweep(spec, base);
    REQUIRE_FALSE(rows.empty());
    std::set<std::string> fingerprints;
    double last_value = -1.0;
    for (const auto& r : rows) {
      CHECK(r.id == "t");
      CHECK(r.parameter == "rate_noma");
      CHECK(r.parameter_value >= last_value);
      last_value = r.parameter_value;
      CHECK_FALSE(r.fingerprint.empty());
      fingerprints.insert(r.fingerprint);
      if (r.source == Source::kAnalytic) {
        CHECK_FALSE(r.std_error.has_value());
        CHECK_FALSE(r.trials.has_value());
      } else {
        CHECK(r.std_error.has_value());
        CHECK(*r.trials == 300);
      }
    }
    CHECK(fingerprints.size() == 2);  // one config per value

    // Each row's fingerprint is that of the config it ran on.
    auto cfg = base;
    cfg.rate_noma = 0.5;
    CHECK(rows.front().fingerprint == fingerprint(cfg));

    std::ostringstream csv;
    write_rows_csv(csv, rows);
    const auto text = csv.str();
    CHECK(text.starts_with(
        "id,curve,parameter,parameter_value,scheme,metric,source,value,std_error,trials,seed,"
        "fingerprint\r\n"));
    CHECK(text.find("\"K=1, R=50\"") != std::string::npos);
    std::size_t lines = 0;
    for (std::size_t p = text.find("\r\n"); p != std::string::npos; p = text.find("\r\n", p + 2)) ++lines;
    CHECK(lines == rows.size() + 1);
    CHECK(text.find('\n') == text.find("\r\n") + 1);

    spec.mode = SweepMode::kAnalytic;
    for (const auto& r : run_sweep(spec, base)) CHECK(r.source == Source::kAnalytic);
    spec.keep_metrics = {"noma_outage"};
    for (const auto& r : run_sweep(spec, base)) CHECK(r.metric == "noma_outage");
  }

  TEST_CASE("sweeps reject bad input") {
    SystemConfig base;
    SweepSpec spec;
    spec.parameter = "rate_noma";
    spec.metrics = {MetricSet::kNomaOutage};
    CHECK_THROWS_AS(run_sweep(spec, base), ConfigError);  // no values
    spec.values = {-1.0};
    CHECK_THROWS_AS(run_sweep(spec, base), ConfigError);
    spec.values = {1.0};
    spec.parameter = "bogus";
    CHECK_THROWS_AS(run_sweep(spec, base), ConfigError);
    CHECK_THROWS(parse_metric_set("nope"));
    CHECK_THROWS(parse_sweep_mode("nope"));
    for (auto m : {MetricSet::kNomaOutage, MetricSet::kCompOutage, MetricSet::kErgodic,
                   MetricSet::kNearest, MetricSet::kOma}) {
      CHECK(parse_metric_set(metric_set_name(m)) == m);
    }
  }

  TEST_CASE("presets") {
    for (const char* name : {"fig2", "fig3", "fig4a", "fig4b", "fig5", "fig6", "fig7", "fig8a", "fig8b",
                             "fig9"}) {
      CAPTURE(name);
      const auto& p = find_preset(name);
      CHECK_FALSE(p.values.empty());
      CHECK_FALSE(p.curves.empty());
      CHECK_NOTHROW(validate(p.base));
    }
    CHECK_THROWS_AS(find_preset("fig42"), std::out_of_range);

    PresetRequest req;
    req.trials = 10;
    req.seed = 7;
    const auto a = rows_to_csv(run_preset("fig2", req));
    const auto b = rows_to_csv(run_preset("fig2", req, {3}));
    CHECK(a == b);
    const auto& fig2 = find_preset("fig2");
    std::size_t lines = 0;
    for (char c : a) lines += c == '\n';
    // Analytic plus Monte Carlo noma_outage per point and curve.
    CHECK(lines == 1 + 2 * fig2.values.size() * fig2.curves.size());
    req.overrides = {"radius_cluster=nope"};
    CHECK_THROWS_AS(run_preset("fig2", req), ConfigError);
  }
}
