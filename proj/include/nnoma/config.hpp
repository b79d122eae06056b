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

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nnoma {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

/// Raised when a configuration value breaks an invariant. `field()` names
/// the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/**
 * All physical and protocol parameters of an uplink network-NOMA CoMP
 * deployment. SI units throughout: metres, watts, hertz, W/Hz.
 *
 * The CoMP user sits at the origin. Base stations form an HPPP of density
 * `lambda_c`; each owns `k_users` candidate users uniform in a disk of radius
 * `radius_cluster`. Only base stations inside the disk of radius
 * `radius_comp` around the origin may join CoMP decoding.
 */
struct SystemConfig {
  double lambda_c = 2e-5;          // BS density, 1/m^2
  double radius_cluster = 50.0;    // m
  double radius_comp = 500.0;      // m
  int k_users = 2;
  double power_noma = 0.1;         // W
  double power_ratio = 10.0;       // P0 / P
  double alpha = 4.0;              // path-loss exponent
  double carrier_freq = 2e9;       // Hz
  double bandwidth = 1e7;          // Hz
  double noise_density = 1e-20;    // W/Hz  (-170 dBm/Hz)
  double rate_noma = 1.0;          // BPCU
  double rate_comp = 1.0;          // BPCU
  int cheb_order = 20;
  // Interferer sampling window; unset means max(5 * radius_comp, 2000 m).
  std::optional<double> sim_radius;

  double power_comp() const { return power_ratio * power_noma; }
  double effective_sim_radius() const;

  bool operator==(const SystemConfig&) const = default;
};

struct DerivedConstants {
  double eta = 0.0;       // c^2 / (16 pi^2 fc^2)
  double sigma2 = 0.0;    // noise power, W
  double rho = 0.0;       // eta P / sigma2
  double eps_noma = 0.0;  // 2^rate_noma - 1
  double eps_comp = 0.0;  // 2^rate_comp - 1
};

/// Throws ConfigError naming the first field that breaks an invariant.
void validate(const SystemConfig& cfg);

/// Validates `cfg` and computes the derived constants. Pure.
DerivedConstants derive_constants(const SystemConfig& cfg);

inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

// ---------------------------------------------------------------------------
// Flat key=value representation
// ---------------------------------------------------------------------------

/// Canonical field names, in serialization order.
const std::vector<std::string_view>& config_keys();

/// Sets one field from text. Throws ConfigError for unknown keys or values
/// that do not parse; does not run the cross-field invariants.
void set_field(SystemConfig& cfg, std::string_view key, std::string_view value);

/// Reads a field as a double (integers widen). Throws ConfigError on an
/// unknown key.
double get_field(const SystemConfig& cfg, std::string_view key);

/// Splits `key = value` lines; `#` starts a comment. Throws ConfigError on a
/// line without '='. Keys are not checked.
std::vector<std::pair<std::string, std::string>> read_key_values(std::istream& in);

/// Parses `key = value` lines; `#` starts a comment. Unknown keys are errors.
SystemConfig parse_config(std::istream& in, SystemConfig base = {});

/// One `key=value` line per field with round-trip precision.
std::string to_key_values(const SystemConfig& cfg);

/// FNV-1a 64 of `to_key_values`, as 16 hex digits.
std::string fingerprint(const SystemConfig& cfg);

}  // namespace nnoma
