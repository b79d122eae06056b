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

#include <algorithm>
#include <cmath>
#include <vector>

#include "nnoma/analytic.hpp"
#include "nnoma/channel.hpp"
#include "stats.hpp"

using nnoma::CompositeGain;
using nnoma::RandomStream;
using nnoma::SystemConfig;

TEST_SUITE("channel") {
  TEST_CASE("path loss") {
    CHECK(nnoma::path_loss(1.0, 4.0) == 1.0);
    CHECK(nnoma::path_loss(2.0, 4.0) == 16.0);
    CHECK(nnoma::path_loss(0.0, 4.0) == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(nnoma::path_loss(0.05, 4.0) == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(nnoma::path_loss(10.0, 3.0) == doctest::Approx(1000.0).epsilon(1e-14));
    CHECK(nnoma::path_loss_sq(9.0, 3.5) == doctest::Approx(std::pow(3.0, 3.5)).epsilon(1e-14));
  }

  TEST_CASE("composite gain") {
    CHECK(nnoma::composite_gain(1.0, 1.0, 4.0).value == 1.0);
    CHECK(nnoma::composite_gain(4.0, 2.0, 4.0).value == 0.25);
  }

  TEST_CASE("selection") {
    const std::vector<CompositeGain> one = {{0.7, 0}};
    CHECK(nnoma::select_noma_user(one) == 0);
    const std::vector<CompositeGain> three = {{0.1, 0}, {0.5, 0}, {0.3, 0}};
    CHECK(nnoma::select_noma_user(three) == 1);
    const std::vector<CompositeGain> tie = {{0.5, 0}, {0.5, 0}};
    CHECK(nnoma::select_noma_user(tie) == 0);
    CHECK_THROWS_AS(nnoma::select_noma_user(std::vector<CompositeGain>{}), std::invalid_argument);
  }

  TEST_CASE("selection is scale equivariant") {
    RandomStream rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<CompositeGain> g(4), scaled(4);
      const double c = 1e-6 + 1e6 * rng.uniform();
      for (std::size_t k = 0; k < g.size(); ++k) {
        g[k].value = rng.exponential();
        scaled[k].value = c * g[k].value;
      }
      REQUIRE(nnoma::select_noma_user(g) == nnoma::select_noma_user(scaled));
    }
  }

  TEST_CASE("fading is unit-mean exponential") {
    SystemConfig cfg;
    cfg.k_users = 4;
    cfg.sim_radius = 3000.0;
    const auto geometry = nnoma::sample_geometry(cfg, RandomStream(3));
    std::vector<double> intra, comp, cross;
    const std::vector<std::size_t> decoders = {0, 1, 2};
    for (std::uint64_t t = 0; cross.size() < 1'000'000; ++t) {
      const auto f = nnoma::draw_fading(cfg, geometry, decoders, RandomStream(7).split(t));
      for (const auto& c : f.clusters) {
        intra.insert(intra.end(), c.intra.begin(), c.intra.end());
        comp.push_back(c.comp);
      }
      for (std::size_t d = 0; d < decoders.size(); ++d) {
        CHECK(f.cross[d][decoders[d]] == 0.0);
        for (std::size_t j = 0; j < f.cross[d].size(); ++j) {
          if (j != decoders[d]) cross.push_back(f.cross[d][j]);
        }
      }
    }
    for (const auto* pop : {&intra, &comp, &cross}) {
      const auto m = nnoma::testing::moments(*pop);
      CHECK(std::abs(m.mean - 1.0) < 3.0 * m.std_error);
      CHECK(*std::min_element(pop->begin(), pop->end()) > 0.0);
    }
  }

  TEST_CASE("composite gain law matches the exact unordered CDF") {
    SystemConfig cfg;
    cfg.radius_cluster = 50.0;
    RandomStream rng(17);
    constexpr std::size_t kDraws = 1'000'000;
    std::vector<double> z;
    z.reserve(kDraws);
    for (std::size_t i = 0; i < kDraws; ++i) {
      const double r = 50.0 * std::sqrt(rng.uniform());
      z.push_back(nnoma::composite_gain(rng.exponential(), r, 4.0).value);
    }
    std::sort(z.begin(), z.end());
    // KS distance evaluated at 400 order statistics spread over the sample.
    double d = 0.0;
    for (std::size_t q = 1; q < 400; ++q) {
      const std::size_t i = q * kDraws / 400;
      const double f = nnoma::exact_unordered_cdf(z[i], cfg);
      d = std::max({d, std::abs(static_cast<double>(i + 1) / kDraws - f),
                    std::abs(static_cast<double>(i) / kDraws - f)});
    }
    CHECK(d < 0.005);
  }

  TEST_CASE("selected gain follows the K-th power of the unordered law") {
    constexpr int kUsers = 3;
    constexpr int kDraws = 200'000;
    RandomStream rng(19);
    std::vector<double> single, best;
    for (int i = 0; i < kDraws; ++i) {
      std::vector<CompositeGain> g(kUsers);
      for (auto& x : g) {
        const double r = 50.0 * std::sqrt(rng.uniform());
        x = nnoma::composite_gain(rng.exponential(), r, 4.0);
      }
      single.push_back(g[0].value);
      best.push_back(g[nnoma::select_noma_user(g)].value);
    }
    std::sort(single.begin(), single.end());
    std::sort(best.begin(), best.end());
    const auto ecdf = [](const std::vector<double>& s, double x) {
      return static_cast<double>(std::upper_bound(s.begin(), s.end(), x) - s.begin()) / s.size();
    };
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double x = best[static_cast<std::size_t>(p * kDraws)];
      const double fmax = ecdf(best, x);
      const double fu = ecdf(single, x);
      CHECK(std::abs(fmax - std::pow(fu, kUsers)) < 4.0 * std::sqrt(fmax * (1 - fmax) / kDraws) + 3e-3);
    }
  }

  TEST_CASE("select_users schedules the strongest composite gain") {
    SystemConfig cfg;
    cfg.k_users = 3;
    cfg.sim_radius = 2000.0;
    const auto geometry = nnoma::sample_geometry(cfg, RandomStream(23));
    const auto fading = nnoma::draw_fading(cfg, geometry, {}, RandomStream(24));
    const auto selected = nnoma::select_users(cfg, geometry, fading);
    REQUIRE(selected.size() == geometry.clusters.size());
    for (std::size_t j = 0; j < selected.size(); ++j) {
      const auto& c = geometry.clusters[j];
      for (int k = 0; k < cfg.k_users; ++k) {
        const double g = fading.clusters[j].intra[k] / nnoma::path_loss(c.user_offsets[k].norm(), 4.0);
        CHECK(g <= doctest::Approx(selected[j].gain).epsilon(1e-12));
      }
      const auto p = c.bs_position + c.user_offsets[selected[j].index];
      CHECK(selected[j].position == p);
    }
  }
}
