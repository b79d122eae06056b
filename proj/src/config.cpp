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
#include "nnoma/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <numbers>
#include <sstream>

namespace nnoma {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "' as an integer");
  }
  return value;
}

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigError(field, what);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double SystemConfig::effective_sim_radius() const {
  if (sim_radius) return *sim_radius;
  return std::max(5.0 * radius_comp, 2000.0);
}

void validate(const SystemConfig& cfg) {
  using std::isfinite;
  require(isfinite(cfg.lambda_c) && cfg.lambda_c >= 0.0, "lambda_c",
          "must be finite and non-negative");
  require(isfinite(cfg.radius_cluster) && cfg.radius_cluster > 0.0, "radius_cluster",
          "must be finite and positive");
  require(isfinite(cfg.radius_comp) && cfg.radius_comp > 0.0, "radius_comp",
          "must be finite and positive");
  require(cfg.k_users >= 1, "k_users", "must be at least 1");
  require(isfinite(cfg.power_noma) && cfg.power_noma > 0.0, "power_noma",
          "must be finite and positive");
  require(isfinite(cfg.power_ratio) && cfg.power_ratio > 0.0, "power_ratio",
          "must be finite and positive");
  require(isfinite(cfg.alpha) && cfg.alpha > 2.0, "alpha", "must exceed 2");
  require(isfinite(cfg.carrier_freq) && cfg.carrier_freq > 0.0, "carrier_freq",
          "must be finite and positive");
  require(isfinite(cfg.bandwidth) && cfg.bandwidth > 0.0, "bandwidth",
          "must be finite and positive");
  require(isfinite(cfg.noise_density) && cfg.noise_density > 0.0, "noise_density",
          "must be finite and positive");
  // +inf rates are allowed: they model a threshold no SINR can meet.
  require(!std::isnan(cfg.rate_noma) && cfg.rate_noma >= 0.0, "rate_noma",
          "must be non-negative");
  require(!std::isnan(cfg.rate_comp) && cfg.rate_comp >= 0.0, "rate_comp",
          "must be non-negative");
  require(cfg.cheb_order >= 1, "cheb_order", "must be at least 1");
  if (cfg.sim_radius) {
    require(isfinite(*cfg.sim_radius) && *cfg.sim_radius >= cfg.radius_comp, "sim_radius",
            "must be finite and at least radius_comp");
  }
}

DerivedConstants derive_constants(const SystemConfig& cfg) {
  validate(cfg);
  DerivedConstants d;
  const double wavelength_ratio = kSpeedOfLight / cfg.carrier_freq;
  d.eta = wavelength_ratio * wavelength_ratio / (16.0 * std::numbers::pi * std::numbers::pi);
  d.sigma2 = cfg.noise_density * cfg.bandwidth;
  d.rho = d.eta * cfg.power_noma / d.sigma2;
  d.eps_noma = std::exp2(cfg.rate_noma) - 1.0;
  d.eps_comp = std::exp2(cfg.rate_comp) - 1.0;
  return d;
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "lambda_c",   "radius_cluster", "radius_comp", "k_users",       "power_noma",
      "power_ratio", "alpha",         "carrier_freq", "bandwidth",    "noise_density",
      "rate_noma",  "rate_comp",      "cheb_order",  "sim_radius"};
  return keys;
}

void set_field(SystemConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "lambda_c") cfg.lambda_c = parse_double(key, value);
  else if (key == "radius_cluster") cfg.radius_cluster = parse_double(key, value);
  else if (key == "radius_comp") cfg.radius_comp = parse_double(key, value);
  else if (key == "k_users") cfg.k_users = parse_int(key, value);
  else if (key == "power_noma") cfg.power_noma = parse_double(key, value);
  else if (key == "power_ratio") cfg.power_ratio = parse_double(key, value);
  else if (key == "alpha") cfg.alpha = parse_double(key, value);
  else if (key == "carrier_freq") cfg.carrier_freq = parse_double(key, value);
  else if (key == "bandwidth") cfg.bandwidth = parse_double(key, value);
  else if (key == "noise_density") cfg.noise_density = parse_double(key, value);
  else if (key == "rate_noma") cfg.rate_noma = parse_double(key, value);
  else if (key == "rate_comp") cfg.rate_comp = parse_double(key, value);
  else if (key == "cheb_order") cfg.cheb_order = parse_int(key, value);
  else if (key == "sim_radius") {
    if (trim(value) == "auto") cfg.sim_radius.reset();
    else cfg.sim_radius = parse_double(key, value);
  } else {
    throw ConfigError(std::string(key), "unknown configuration key");
  }
}

double get_field(const SystemConfig& cfg, std::string_view key) {
  if (key == "lambda_c") return cfg.lambda_c;
  if (key == "radius_cluster") return cfg.radius_cluster;
  if (key == "radius_comp") return cfg.radius_comp;
  if (key == "k_users") return cfg.k_users;
  if (key == "power_noma") return cfg.power_noma;
  if (key == "power_ratio") return cfg.power_ratio;
  if (key == "alpha") return cfg.alpha;
  if (key == "carrier_freq") return cfg.carrier_freq;
  if (key == "bandwidth") return cfg.bandwidth;
  if (key == "noise_density") return cfg.noise_density;
  if (key == "rate_noma") return cfg.rate_noma;
  if (key == "rate_comp") return cfg.rate_comp;
  if (key == "cheb_order") return cfg.cheb_order;
  if (key == "sim_radius") return cfg.effective_sim_radius();
  throw ConfigError(std::string(key), "unknown configuration key");
}

std::vector<std::pair<std::string, std::string>> read_key_values(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected key=value");
    }
    entries.emplace_back(trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
  }
  return entries;
}

SystemConfig parse_config(std::istream& in, SystemConfig base) {
  for (const auto& [key, value] : read_key_values(in)) set_field(base, key, value);
  return base;
}

std::string to_key_values(const SystemConfig& cfg) {
  std::ostringstream out;
  for (auto key : config_keys()) {
    out << key << '=';
    if (key == "k_users" || key == "cheb_order") {
      out << static_cast<int>(get_field(cfg, key));
    } else if (key == "sim_radius" && !cfg.sim_radius) {
      out << "auto";
    } else {
      out << format_double(get_field(cfg, key));
    }
    out << '\n';
  }
  return out.str();
}

std::string fingerprint(const SystemConfig& cfg) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : to_key_values(cfg)) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace nnoma
