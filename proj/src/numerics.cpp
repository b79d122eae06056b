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
#include "nnoma/numerics.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <vector>

namespace nnoma::numerics {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// One 15-point Kronrod panel with the embedded 7-point Gauss estimate as its
// error. Boost's own single-panel error is not rescaled to [a, b] in every
// release, so the difference is formed here from the published tables.
Panel evaluate_panel(const Integrand& f, double a, double b) {
  const auto& x = Rule::abscissa();
  const auto& wk = Rule::weights();
  const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(center);
  double kronrod = wk[0] * f0;
  double gauss = wg[0] * f0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = f(center - half * x[i]) + f(center + half * x[i]);
    kronrod += wk[i] * pair;
    // Even Kronrod nodes coincide with the Gauss nodes.
    if (i % 2 == 0) gauss += wg[i / 2] * pair;
  }
  return {a, b, half * kronrod, half * std::abs(kronrod - gauss)};
}

double lgamma_safe(double x) {
  int sign = 0;
  return lgamma_r(x, &sign);
}

}  // namespace

Integral integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  if (!(a <= b)) throw std::invalid_argument("integrate: need a <= b");
  if (a == b) return {};
  // Global adaptive bisection: always refine the panel with the worst error.
  std::priority_queue<Panel> panels;
  panels.push(evaluate_panel(f, a, b));
  const std::size_t max_panels = std::size_t{1} << opts.max_depth;
  double value = panels.top().value;
  double error = panels.top().error;
  for (;;) {
    if (!std::isfinite(value)) throw QuadratureError("integrate: non-finite integrand", value, error);
    if (error <= std::max(opts.rel_tol * std::abs(value), opts.abs_floor)) break;
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (panels.size() >= max_panels || mid <= worst.a || mid >= worst.b) {
      throw QuadratureError("integrate: tolerance not reached (value " + std::to_string(value) +
                                ", error estimate " + std::to_string(error) + ")",
                            value, error);
    }
    panels.pop();
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    panels.push(left);
    panels.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Re-sum exactly; the running totals above only steer refinement.
  NeumaierSum v, e;
  for (; !panels.empty(); panels.pop()) {
    v.add(panels.top().value);
    e.add(panels.top().error);
  }
  return {v.value(), e.value()};
}

Integral integrate_semi_infinite(const Integrand& f, double a, const QuadratureOptions& opts) {
  const auto mapped = [&](double t) {
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    return f(a + t / u) / (u * u);
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("beta_fn: arguments must be positive and finite");
  }
  return std::exp(lgamma_safe(a) + lgamma_safe(b) - lgamma_safe(a + b));
}

double hyp2f1_special(double alpha, double x) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) {
    throw std::domain_error("hyp2f1_special: alpha must exceed 2");
  }
  if (!(x <= 0.0)) throw std::domain_error("hyp2f1_special: argument must be <= 0");
  const double y = -x;
  if (y == 0.0) return 1.0;
  const double b = 1.0 + 2.0 / alpha;

  if (alpha == 4.0) {
    // 2F1(1, 3/2; 5/2; -y) = 3/y (1 - arctan(sqrt y) / sqrt y); series near 0.
    if (y < 1e-2) {
      double term = 1.0, sum = 0.0;
      for (int n = 0; n < 40; ++n) {
        sum += 3.0 * term / (3.0 + 2.0 * n);
        term *= -y;
      }
      return sum;
    }
    const double r = std::sqrt(y);
    return 3.0 / y * (1.0 - std::atan(r) / r);
  }

  if (y < 0.5) {
    // sum_n b / (b + n) (-y)^n, alternating with shrinking terms.
    double term = 1.0;
    NeumaierSum sum;
    for (int n = 0; n < 80; ++n) {
      sum.add(b * term / (b + n));
      term *= -y;
    }
    return sum.value();
  }

  // Euler integral b * int_0^1 t^(b-1) / (1 + y t) dt with t = exp(-v / b):
  // int_0^inf exp(-v) / (1 + y exp(-v / b)) dv. The integrand turns over near
  // v = b ln(1 + y); split there so both panels are smooth.
  const auto f = [y, b](double v) { return std::exp(-v) / (1.0 + y * std::exp(-v / b)); };
  const double knee = b * std::log1p(y);
  const double tail = knee + 60.0;
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_floor = 1e-300;
  NeumaierSum total;
  if (knee > 0.0) total.add(integrate(f, 0.0, knee, opts).value);
  total.add(integrate(f, knee, tail, opts).value);
  return total.value();
}

}  // namespace nnoma::numerics
