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
#include <vector>

#include "nnoma/random.hpp"
#include "stats.hpp"

using nnoma::Philox4x32;
using nnoma::RandomStream;

TEST_SUITE("random") {
  TEST_CASE("Philox4x32-10 known answers") {
    // Reference vectors published with the Random123 library.
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0}) ==
          C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                               K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                               K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
  }

  TEST_CASE("streams are reproducible and split without consuming") {
    RandomStream a(42), b(42);
    const auto child_before = a.split(7);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    auto child_after = a.split(7);
    auto child_copy = child_before;
    for (int i = 0; i < 10; ++i) CHECK(child_copy.next_u64() == child_after.next_u64());
    std::set<std::uint64_t> firsts;
    for (std::uint64_t t = 0; t < 1000; ++t) firsts.insert(RandomStream(42).split(t).next_u64());
    CHECK(firsts.size() == 1000);
    CHECK(RandomStream(1).next_u64() != RandomStream(2).next_u64());
  }

  TEST_CASE("uniform and exponential moments") {
    RandomStream rng(7);
    std::vector<double> u, e;
    for (int i = 0; i < 1'000'000; ++i) {
      const double x = rng.uniform();
      CHECK_UNARY(x >= 0.0);
      REQUIRE(x < 1.0);
      u.push_back(x);
      e.push_back(rng.exponential());
    }
    const auto mu = nnoma::testing::moments(u);
    CHECK(std::abs(mu.mean - 0.5) < 3.0 * mu.std_error);
    const auto me = nnoma::testing::moments(e);
    CHECK(std::abs(me.mean - 1.0) < 3.0 * me.std_error);
    CHECK(me.variance == doctest::Approx(1.0).epsilon(0.01));
    CHECK(nnoma::testing::ks_distance(u, [](double x) { return x; }) <
          nnoma::testing::ks_critical_1pct(u.size()));
  }

  TEST_CASE("poisson moments") {
    for (double mean : {0.0, 0.3, 4.0, 15.7, 392.7, 5000.0}) {
      RandomStream rng(11);
      std::vector<double> xs;
      for (int i = 0; i < 100'000; ++i) xs.push_back(static_cast<double>(rng.poisson(mean)));
      const auto m = nnoma::testing::moments(xs);
      if (mean == 0.0) {
        CHECK(m.mean == 0.0);
        continue;
      }
      CHECK(std::abs(m.mean - mean) < 4.0 * std::sqrt(mean / 1e5));
      CHECK(m.variance == doctest::Approx(mean).epsilon(0.03));
    }
  }

  TEST_CASE("bounded integers are unbiased") {
    RandomStream rng(3);
    std::vector<double> counts(7, 0.0);
    for (int i = 0; i < 700'000; ++i) counts[rng.below(7)] += 1.0;
    // 1% critical value of chi-square with 6 degrees of freedom.
    CHECK(nnoma::testing::chi_square_uniform(counts) < 16.81);
  }
}
