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
#include <cstring>
#include <numbers>
#include <sstream>

#include "nnoma/config.hpp"

using nnoma::ConfigError;
using nnoma::SystemConfig;

TEST_SUITE("config") {
  TEST_CASE("path-loss scale at 2 GHz") {
    SystemConfig cfg;
    const auto dc = nnoma::derive_constants(cfg);
    // c^2 / (16 pi^2 f^2) in long double.
    const long double c = 2.99792458e8L;
    const long double f = 2e9L;
    const long double pi = std::numbers::pi_v<long double>;
    const long double oracle = c * c / (16.0L * pi * pi * f * f);
    CHECK(dc.eta == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-14));
    // The rounded light speed of 3e8 gives 1.4249e-4; the exact constant stays within 0.2%.
    const long double rounded = 9e16L / (16.0L * pi * pi * f * f);
    CHECK(static_cast<double>(rounded) == doctest::Approx(1.4249e-4).epsilon(1e-4));
    CHECK(dc.eta == doctest::Approx(1.4249e-4).epsilon(2e-3));
  }

  TEST_CASE("noise power from -170 dBm/Hz over 10 MHz") {
    SystemConfig cfg;
    cfg.noise_density = nnoma::dbm_to_watts(-170.0);
    CHECK(cfg.noise_density == doctest::Approx(1e-20).epsilon(1e-12));
    const auto dc = nnoma::derive_constants(cfg);
    CHECK(dc.sigma2 == doctest::Approx(1e-13).epsilon(1e-12));
    CHECK(dc.rho == doctest::Approx(dc.eta * cfg.power_noma / dc.sigma2).epsilon(1e-15));
  }

  TEST_CASE("thresholds") {
    SystemConfig cfg;
    cfg.rate_noma = 0.0;
    cfg.rate_comp = 1.0;
    auto dc = nnoma::derive_constants(cfg);
    CHECK(dc.eps_noma == 0.0);
    CHECK(dc.eps_comp == 1.0);
    cfg.rate_noma = 1.0;
    CHECK(nnoma::derive_constants(cfg).eps_noma == 1.0);
  }

  TEST_CASE("pure and monotone") {
    SystemConfig cfg;
    const auto a = nnoma::derive_constants(cfg);
    const auto b = nnoma::derive_constants(cfg);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
    double last_eps = -1.0, last_rho = 0.0;
    for (double r : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      cfg.rate_noma = r;
      cfg.power_noma = r;
      const auto dc = nnoma::derive_constants(cfg);
      CHECK(dc.eps_noma > last_eps);
      CHECK(dc.rho > last_rho);
      last_eps = dc.eps_noma;
      last_rho = dc.rho;
    }
  }

  TEST_CASE("invariants name the offending field") {
    const auto field_of = [](SystemConfig cfg) -> std::string {
      try {
        nnoma::validate(cfg);
      } catch (const ConfigError& e) {
        return e.field();
      }
      return "";
    };
    SystemConfig cfg;
    CHECK(field_of(cfg).empty());
    auto bad = cfg;
    bad.alpha = 2.0;
    CHECK(field_of(bad) == "alpha");
    bad = cfg;
    bad.radius_cluster = 0.0;
    CHECK(field_of(bad) == "radius_cluster");
    bad = cfg;
    bad.k_users = 0;
    CHECK(field_of(bad) == "k_users");
    bad = cfg;
    bad.cheb_order = 0;
    CHECK(field_of(bad) == "cheb_order");
    bad = cfg;
    bad.power_noma = -1.0;
    CHECK(field_of(bad) == "power_noma");
    bad = cfg;
    bad.sim_radius = cfg.radius_comp - 1.0;
    CHECK(field_of(bad) == "sim_radius");
    bad = cfg;
    bad.bandwidth = std::nan("");
    CHECK(field_of(bad) == "bandwidth");
    CHECK_THROWS_AS(nnoma::derive_constants(bad), ConfigError);
    // No ordering between the cluster and CoMP radii.
    auto ok = cfg;
    ok.radius_cluster = 800.0;
    CHECK(field_of(ok).empty());
  }

  TEST_CASE("default sampling window") {
    SystemConfig cfg;
    cfg.radius_comp = 200.0;
    CHECK(cfg.effective_sim_radius() == 2000.0);
    cfg.radius_comp = 500.0;
    CHECK(cfg.effective_sim_radius() == 2500.0);
    cfg.sim_radius = 3000.0;
    CHECK(cfg.effective_sim_radius() == 3000.0);
  }

  TEST_CASE("key=value round trip") {
    SystemConfig cfg;
    cfg.lambda_c = 3.3e-5;
    cfg.k_users = 3;
    cfg.power_noma = 0.123456789012345;
    cfg.sim_radius = 4321.5;
    std::istringstream in(nnoma::to_key_values(cfg));
    const auto back = nnoma::parse_config(in);
    CHECK(back == cfg);
    CHECK(nnoma::fingerprint(back) == nnoma::fingerprint(cfg));
    auto other = cfg;
    other.rate_comp = 2.0;
    CHECK(nnoma::fingerprint(other) != nnoma::fingerprint(cfg));
    CHECK(nnoma::fingerprint(cfg).size() == 16);
  }

  TEST_CASE("parser rejects unknown keys and malformed lines") {
    std::istringstream unknown("lambda_c = 1e-5\nfoo = 3\n");
    CHECK_THROWS_AS(nnoma::parse_config(unknown), ConfigError);
    std::istringstream malformed("lambda_c 1e-5\n");
    CHECK_THROWS_AS(nnoma::parse_config(malformed), ConfigError);
    std::istringstream bad_number("k_users = two\n");
    CHECK_THROWS_AS(nnoma::parse_config(bad_number), ConfigError);
    std::istringstream fine("# comment\n  k_users = 3   # trailing\n\nsim_radius = auto\n");
    const auto cfg = nnoma::parse_config(fine);
    CHECK(cfg.k_users == 3);
    CHECK_FALSE(cfg.sim_radius.has_value());
  }

  TEST_CASE("dBm conversion") {
    CHECK(nnoma::dbm_to_watts(30.0) == doctest::Approx(1.0));
    CHECK(nnoma::dbm_to_watts(20.0) == doctest::Approx(0.1));
    CHECK(nnoma::watts_to_dbm(nnoma::dbm_to_watts(17.5)) == doctest::Approx(17.5));
  }
}
