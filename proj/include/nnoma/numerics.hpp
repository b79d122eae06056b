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
#include <functional>
#include <stdexcept>
#include <string>

namespace nnoma::numerics {

/// Raised when adaptive quadrature misses its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double error)
      : std::runtime_error(what), value_(value), error_(error) {}
  double value() const { return value_; }
  double error() const { return error_; }

 private:
  double value_;
  double error_;
};

/// Neumaier's variant of Kahan summation.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_floor = 1e-12;  // stop refining once the error is below this
  unsigned max_depth = 20;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) on a finite interval. Throws QuadratureError
/// if the error estimate exceeds max(rel_tol |I|, abs_floor).
Integral integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts = {});

/// Integral over [a, inf), mapped to [0, 1) by x = a + t / (1 - t).
Integral integrate_semi_infinite(const Integrand& f, double a,
                                 const QuadratureOptions& opts = {});

/// Euler Beta function via log-Gamma. Domain error unless a, b > 0.
double beta_fn(double a, double b);

/// 2F1(1, 1 + 2/alpha; 2 + 2/alpha; x) for x <= 0 and alpha > 2.
double hyp2f1_special(double alpha, double x);

}  // namespace nnoma::numerics
