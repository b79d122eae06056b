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

// Small statistics helpers shared by the unit tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace nnoma::testing {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
};

inline Moments moments(const std::vector<double>& xs) {
  Moments m;
  const double n = static_cast<double>(xs.size());
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.variance = ss / (n - 1.0);
  m.std_error = std::sqrt(m.variance / n);
  return m;
}

/// Kolmogorov-Smirnov distance of a sample against a continuous CDF.
inline double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

/// Asymptotic KS critical value at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

/// Pearson statistic of bin counts against equal expected counts.
inline double chi_square_uniform(const std::vector<double>& counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0.0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  return stat;
}

}  // namespace nnoma::testing
