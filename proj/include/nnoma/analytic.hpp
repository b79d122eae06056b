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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nnoma/config.hpp"
#include "nnoma/numerics.hpp"

namespace nnoma {

/// Thrown by closed forms that only exist for a path-loss exponent of 4.
class UnsupportedExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a composition sum would exceed the enumeration budget.
class EnumerationOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Gauss-Chebyshev representation of the unordered composite-gain CDF,
/// F(z) ~ sum_n w_n (1 - exp(-c_n z)). Index 0 of the extended arrays is the
/// constant term (weight 1, rate 0); indices 1..N follow the nodes.
struct ChebyshevBasis {
  int order = 0;
  std::vector<double> nodes;    // theta_n, n = 1..N stored at [n-1]
  std::vector<double> weights;  // w_n
  std::vector<double> rates;    // c_n

  double extended_weight(int n) const { return n == 0 ? 1.0 : -weights[n - 1]; }
  double extended_rate(int n) const { return n == 0 ? 0.0 : rates[n - 1]; }
};

ChebyshevBasis cheb_basis(const SystemConfig& cfg);

/// Series value, may leave [0, 1] slightly.
double unordered_cdf_raw(double z, const ChebyshevBasis& basis);
/// Clamped to [0, 1].
double unordered_cdf(double z, const ChebyshevBasis& basis);
double unordered_pdf(double z, const ChebyshevBasis& basis);

/// Reference CDF of |h|^2 / r^alpha with r uniform in the cluster disk, by
/// adaptive quadrature over r.
double exact_unordered_cdf(double z, const SystemConfig& cfg);

/// E[exp(-s phi |h|^2 / L(dist))] for unit-mean exponential |h|^2.
double laplace_comp(double s, double dist, const SystemConfig& cfg);

/// Laplace transform of inter-cluster interference at a typical BS.
double laplace_inter(double s, const SystemConfig& cfg);

/// Interference Laplace transform at the BS nearest to the CoMP user, at
/// distance d, with the no-closer-BS exclusion zone. alpha = 4 only.
double laplace_inter_nearest(double s, double d, const SystemConfig& cfg);

/// E[r^alpha / (r^alpha + a)] for r uniform in the disk of `radius`.
double disk_average(double a, double radius, double alpha);

/// One term (k_0, ..., k_N) of a multinomial expansion of order K.
struct Composition {
  std::vector<int> counts;
  std::uint64_t coefficient = 0;  // K! / (k_0! ... k_N!)
  double mu = 0.0;                // sum_n k_n c~_n (filled when a basis is given)
  double weight = 0.0;            // coefficient * prod_n w~_n^k_n (same)
};

inline constexpr std::uint64_t kMaxCompositions = 10'000'000;

/// All (N+1)-part compositions of K except (K, 0, ..., 0), in lexicographic
/// order of counts. Throws EnumerationOverflow when C(K+N, N) > kMaxCompositions
/// or a coefficient does not fit in 64 bits.
std::vector<Composition> enumerate_compositions(int k, int n);

/// Same enumeration with mu and weight filled from `basis`.
std::vector<Composition> enumerate_compositions(const ChebyshevBasis& basis, int k);

struct OutageValue {
  double value = 0.0;  // clamped to [0, 1]
  double raw = 0.0;
};

/// Outage probability of a typical NOMA user inside the CoMP disk.
OutageValue typical_noma_outage(const SystemConfig& cfg);

/// Ergodic rate of a typical NOMA user inside the CoMP disk (adaptive rates).
double typical_noma_ergodic_rate(const SystemConfig& cfg);

/// Integrand of the ergodic rate over the SINR threshold x > 0, that is
/// P(SINR > x) / (1 + x); its integral over (0, inf) is the rate times ln 2.
double ergodic_rate_integrand(double x, const SystemConfig& cfg);

/// Ergodic sum rate of the NOMA users inside the disk for mean rate r_ave.
double disk_noma_sum_rate(const SystemConfig& cfg, double r_ave);

/// Nearest scheme, NOMA user of the nearest BS. alpha = 4 only.
OutageValue nearest_noma_outage(const SystemConfig& cfg);

/// Nearest scheme, CoMP user. alpha = 4 only.
OutageValue nearest_comp_outage(const SystemConfig& cfg);

}  // namespace nnoma
