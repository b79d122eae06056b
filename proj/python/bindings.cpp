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

// Python bindings: configuration, closed forms, estimators and sweeps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nnoma/analytic.hpp"
#include "nnoma/config.hpp"
#include "nnoma/experiment.hpp"
#include "nnoma/simulate.hpp"

namespace py = pybind11;

namespace {

nnoma::SystemConfig config_from_kwargs(const py::kwargs& kwargs) {
  nnoma::SystemConfig cfg;
  for (const auto& [key, value] : kwargs) {
    nnoma::set_field(cfg, py::str(key).cast<std::string>(), py::str(value).cast<std::string>());
  }
  nnoma::validate(cfg);
  return cfg;
}

py::dict estimate_dict(const nnoma::MonteCarloEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["std_error"] = e.std_error;
  d["trials"] = e.trials;
  d["seed"] = e.seed;
  return d;
}

py::list rows_to_dicts(const std::vector<nnoma::ResultRow>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["id"] = r.id;
    d["curve"] = r.curve;
    d["parameter"] = r.parameter;
    d["parameter_value"] = r.parameter_value;
    d["scheme"] = r.scheme;
    d["metric"] = r.metric;
    d["source"] = r.source == nnoma::Source::kAnalytic ? "analytic" : "mc";
    d["value"] = r.value;
    d["std_error"] = r.std_error ? py::cast(*r.std_error) : py::none();
    d["trials"] = r.trials ? py::cast(*r.trials) : py::none();
    d["seed"] = r.seed ? py::cast(*r.seed) : py::none();
    d["fingerprint"] = r.fingerprint;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_nnoma, m) {
  m.doc() = "Network-NOMA CoMP uplink: closed forms and Monte Carlo estimators";

  py::register_exception<nnoma::ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<nnoma::SystemConfig>(m, "SystemConfig")
      .def(py::init(&config_from_kwargs))
      .def_readwrite("lambda_c", &nnoma::SystemConfig::lambda_c)
      .def_readwrite("radius_cluster", &nnoma::SystemConfig::radius_cluster)
      .def_readwrite("radius_comp", &nnoma::SystemConfig::radius_comp)
      .def_readwrite("k_users", &nnoma::SystemConfig::k_users)
      .def_readwrite("power_noma", &nnoma::SystemConfig::power_noma)
      .def_readwrite("power_ratio", &nnoma::SystemConfig::power_ratio)
      .def_readwrite("alpha", &nnoma::SystemConfig::alpha)
      .def_readwrite("carrier_freq", &nnoma::SystemConfig::carrier_freq)
      .def_readwrite("bandwidth", &nnoma::SystemConfig::bandwidth)
      .def_readwrite("noise_density", &nnoma::SystemConfig::noise_density)
      .def_readwrite("rate_noma", &nnoma::SystemConfig::rate_noma)
      .def_readwrite("rate_comp", &nnoma::SystemConfig::rate_comp)
      .def_readwrite("cheb_order", &nnoma::SystemConfig::cheb_order)
      .def_readwrite("sim_radius", &nnoma::SystemConfig::sim_radius)
      .def("validate", [](const nnoma::SystemConfig& c) { nnoma::validate(c); })
      .def("fingerprint", [](const nnoma::SystemConfig& c) { return nnoma::fingerprint(c); })
      .def("to_key_values", [](const nnoma::SystemConfig& c) { return nnoma::to_key_values(c); })
      .def("__eq__", [](const nnoma::SystemConfig& a, const nnoma::SystemConfig& b) { return a == b; })
      .def("__repr__", [](const nnoma::SystemConfig& c) {
        return "SystemConfig(fingerprint=" + nnoma::fingerprint(c) + ")";
      });

  m.def("config_keys", [] {
    std::vector<std::string> keys;
    for (auto k : nnoma::config_keys()) keys.emplace_back(k);
    return keys;
  });
  m.def("dbm_to_watts", &nnoma::dbm_to_watts);

  m.def("typical_noma_outage", [](const nnoma::SystemConfig& c) { return nnoma::typical_noma_outage(c).value; });
  m.def("typical_noma_ergodic_rate", &nnoma::typical_noma_ergodic_rate);
  m.def("disk_noma_sum_rate", &nnoma::disk_noma_sum_rate, py::arg("cfg"), py::arg("user_rate"));
  m.def("nearest_noma_outage", [](const nnoma::SystemConfig& c) { return nnoma::nearest_noma_outage(c).value; });
  m.def("nearest_comp_outage", [](const nnoma::SystemConfig& c) { return nnoma::nearest_comp_outage(c).value; });
  m.def("laplace_inter", &nnoma::laplace_inter, py::arg("s"), py::arg("cfg"));

  m.def(
      "simulate_noma_outage",
      [](const nnoma::SystemConfig& c, std::uint64_t trials, std::uint64_t seed, int threads) {
        nnoma::MonteCarloEstimate e;
        {
          py::gil_scoped_release release;
          e = nnoma::simulate_noma_outage(c, trials, seed, {threads});
        }
        return estimate_dict(e);
      },
      py::arg("cfg"), py::arg("trials"), py::arg("seed") = 1, py::arg("threads") = 1);

  m.def("presets", [] {
    std::vector<std::string> names;
    for (const auto& p : nnoma::presets()) names.push_back(p.name);
    return names;
  });

  m.def(
      "run_preset",
      [](const std::string& name, std::optional<std::uint64_t> trials, std::uint64_t seed,
         const std::vector<std::string>& overrides, const std::string& mode, int threads) {
        nnoma::PresetRequest req;
        req.trials = trials;
        req.seed = seed;
        req.overrides = overrides;
        req.mode = nnoma::parse_sweep_mode(mode);
        std::vector<nnoma::ResultRow> rows;
        {
          py::gil_scoped_release release;
          rows = nnoma::run_preset(name, req, {threads});
        }
        return rows_to_dicts(rows);
      },
      py::arg("name"), py::arg("trials") = py::none(), py::arg("seed") = 1,
      py::arg("overrides") = std::vector<std::string>{}, py::arg("mode") = "both",
      py::arg("threads") = 1);

  m.def(
      "sweep",
      [](const nnoma::SystemConfig& base, const std::string& parameter, const std::vector<double>& values,
         const std::vector<std::string>& metrics, std::uint64_t trials, std::uint64_t seed,
         const std::string& mode, int threads) {
        nnoma::SweepSpec spec;
        spec.parameter = parameter;
        spec.values = values;
        for (const auto& name : metrics) spec.metrics.push_back(nnoma::parse_metric_set(name));
        spec.trials = trials;
        spec.seed = seed;
        spec.mode = nnoma::parse_sweep_mode(mode);
        std::vector<nnoma::ResultRow> rows;
        {
          py::gil_scoped_release release;
          rows = nnoma::run_sweep(spec, base, {threads});
        }
        return rows_to_dicts(rows);
      },
      py::arg("base"), py::arg("parameter"), py::arg("values"), py::arg("metrics"),
      py::arg("trials") = 10000, py::arg("seed") = 1, py::arg("mode") = "both", py::arg("threads") = 1);
}
