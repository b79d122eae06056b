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
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "nnoma/numerics.hpp"

namespace num = nnoma::numerics;

namespace {

// 2F1(1, 1 + d; 2 + d; x) = (1 + d) int_0^1 t^d / (1 - x t) dt, d = 2 / alpha.
double hyp2f1_euler(double alpha, double x) {
  const double d = 2.0 / alpha;
  boost::math::quadrature::tanh_sinh<double> integrator;
  return (1.0 + d) *
         integrator.integrate([&](double t) { return std::pow(t, d) / (1.0 - x * t); }, 0.0, 1.0,
                              1e-15);
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("beta function") {
    CHECK(num::beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(num::beta_fn(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-13));
    CHECK(num::beta_fn(2.0 / 4.0, 2.0 / 4.0) == doctest::Approx(std::numbers::pi).epsilon(1e-13));
    for (double a : {0.1, 0.4, 0.8, 1.5, 3.0, 7.5}) {
      for (double b : {0.2, 0.6, 1.0, 2.5, 9.0}) {
        const double ref = boost::math::beta(a, b);
        CHECK(std::abs(num::beta_fn(a, b) - ref) / ref < 1e-12);
      }
    }
    CHECK_THROWS_AS(num::beta_fn(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(num::beta_fn(1.0, -2.0), std::domain_error);
  }

  TEST_CASE("hypergeometric special case") {
    CHECK(num::hyp2f1_special(4.0, 0.0) == 1.0);
    CHECK(num::hyp2f1_special(3.0, 0.0) == 1.0);
    // (3/2) int_0^1 sqrt(t) / (1 + t) dt = 3 - 3 pi / 4.
    CHECK(num::hyp2f1_special(4.0, -1.0) ==
          doctest::Approx(3.0 - 0.75 * std::numbers::pi).epsilon(1e-13));
    CHECK(num::hyp2f1_special(4.0, -1e6) == doctest::Approx(hyp2f1_euler(4.0, -1e6)).epsilon(1e-8));
    CHECK_THROWS_AS(num::hyp2f1_special(4.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(num::hyp2f1_special(2.0, -1.0), std::domain_error);
  }

  TEST_CASE("hypergeometric against the Euler integral on a log grid") {
    for (double alpha : {2.2, 2.5, 3.0, 3.7, 4.0, 5.0, 6.0}) {
      for (int i = 0; i < 50; ++i) {
        const double x = -std::pow(10.0, -6.0 + 18.0 * i / 49.0);  // down to -1e12
        const double ref = hyp2f1_euler(alpha, x);
        INFO("alpha=" << alpha << " x=" << x);
        CHECK(std::abs(num::hyp2f1_special(alpha, x) - ref) / ref < 1e-8);
      }
    }
  }

  TEST_CASE("adaptive quadrature on known integrals") {
    const auto r1 = num::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-12));
    const auto r2 = num::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(r2.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    const auto r3 = num::integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
    CHECK(r3.value == doctest::Approx(1.0).epsilon(1e-10));
    const auto r4 =
        num::integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, 0.0);
    CHECK(r4.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    const auto r5 = num::integrate([](double x) { return x; }, 1.0, 1.0);
    CHECK(r5.value == 0.0);
  }

  TEST_CASE("quadrature is stable when the budget is doubled") {
    const auto f = [](double x) { return std::exp(-x) * std::log1p(1.0 / x) / (1.0 + x); };
    num::QuadratureOptions a, b;
    a.rel_tol = 1e-7;
    b.rel_tol = 1e-7;
    b.max_depth = a.max_depth + 1;
    const double va = num::integrate_semi_infinite(f, 0.0, a).value;
    const double vb = num::integrate_semi_infinite(f, 0.0, b).value;
    CHECK(std::abs(va - vb) / std::abs(vb) < 1e-6);
    num::QuadratureOptions tight = a;
    tight.rel_tol = 1e-11;
    CHECK(std::abs(va - num::integrate_semi_infinite(f, 0.0, tight).value) / std::abs(vb) < 1e-6);
  }

  TEST_CASE("quadrature failures are reported") {
    num::QuadratureOptions opts;
    opts.max_depth = 2;
    opts.rel_tol = 1e-14;
    opts.abs_floor = 0.0;
    CHECK_THROWS_AS(num::integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, opts),
                    num::QuadratureError);
    CHECK_THROWS_AS(num::integrate([](double) { return std::nan(""); }, 0.0, 1.0),
                    num::QuadratureError);
    try {
      num::integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, opts);
    } catch (const num::QuadratureError& e) {
      CHECK(e.error() > 0.0);
      CHECK(std::isfinite(e.value()));
    }
  }

  TEST_CASE("compensated summation") {
    num::NeumaierSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 2.0);
  }
}
