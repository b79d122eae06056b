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
#include "nnoma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace nnoma {

using numerics::NeumaierSum;
using std::numbers::pi;

namespace {

void require_alpha4(const SystemConfig& cfg, const char* what) {
  if (cfg.alpha != 4.0) {
    throw UnsupportedExponent(std::string(what) + ": closed form needs alpha = 4");
  }
}

/// Exponent of laplace_inter per unit s^(2/alpha): -2 pi lambda B(.,.) / alpha.
double inter_exponent_scale(const SystemConfig& cfg) {
  const double delta = 2.0 / cfg.alpha;
  return -2.0 * pi * cfg.lambda_c * numerics::beta_fn(delta, 1.0 - delta) / cfg.alpha;
}

/// log of the exclusion-zone correction in laplace_inter_nearest.
double nearest_correction_log(double s, double d, double lambda) {
  if (s == 0.0) return 0.0;
  const double d2 = d * d;
  const double inner = -0.5 + 0.5 * std::sqrt(1.0 + 16.0 * d2 * d2 / s);
  return 0.5 * pi * lambda * std::sqrt(s) * std::atan(std::sqrt(std::max(0.0, inner)));
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw EnumerationOverflow("multinomial coefficient exceeds 64 bits");
  }
  return r;
}

/// Exact C(n, k) in 64-bit integers; every partial product is itself a
/// binomial coefficient, so the divisions are exact.
std::uint64_t exact_binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
  }
  return r;
}

OutageValue clamp_outage(double raw) { return {std::clamp(raw, 0.0, 1.0), raw}; }

numerics::QuadratureOptions rate_quadrature() {
  numerics::QuadratureOptions opts;
  opts.rel_tol = 1e-6;
  opts.abs_floor = 1e-12;
  opts.max_depth = 16;
  return opts;
}

/// Integrates g(d) against the nearest-BS distance pdf, via u = lambda pi d^2.
template <typename G>
double nearest_distance_average(const SystemConfig& cfg, G g) {
  const double scale = 1.0 / (cfg.lambda_c * pi);
  const auto f = [&](double u) { return std::exp(-u) * g(std::sqrt(u * scale)); };
  return numerics::integrate_semi_infinite(f, 0.0, rate_quadrature()).value;
}

void require_nearest(const SystemConfig& cfg, const char* what) {
  validate(cfg);
  require_alpha4(cfg, what);
  if (cfg.lambda_c == 0.0) throw ConfigError("lambda_c", std::string(what) + " needs lambda_c > 0");
}

}  // namespace

ChebyshevBasis cheb_basis(const SystemConfig& cfg) {
  validate(cfg);
  ChebyshevBasis basis;
  const int n_order = cfg.cheb_order;
  basis.order = n_order;
  const double half = 0.5 * cfg.radius_cluster;
  for (int n = 1; n <= n_order; ++n) {
    const double theta = std::cos((2.0 * n - 1.0) * pi / (2.0 * n_order));
    basis.nodes.push_back(theta);
    basis.weights.push_back(pi / (2.0 * n_order) * std::sqrt(1.0 - theta * theta) * (theta + 1.0));
    basis.rates.push_back(std::pow(half * theta + half, cfg.alpha));
  }
  return basis;
}

double unordered_cdf_raw(double z, const ChebyshevBasis& basis) {
  if (!(z >= 0.0)) throw std::domain_error("unordered_cdf: z must be >= 0");
  NeumaierSum sum;
  for (std::size_t n = 0; n < basis.weights.size(); ++n) {
    sum.add(basis.weights[n] * -std::expm1(-basis.rates[n] * z));
  }
  return sum.value();
}

double unordered_cdf(double z, const ChebyshevBasis& basis) {
  return std::clamp(unordered_cdf_raw(z, basis), 0.0, 1.0);
}

double unordered_pdf(double z, const ChebyshevBasis& basis) {
  if (!(z >= 0.0)) throw std::domain_error("unordered_pdf: z must be >= 0");
  NeumaierSum sum;
  for (std::size_t n = 0; n < basis.weights.size(); ++n) {
    sum.add(basis.weights[n] * basis.rates[n] * std::exp(-basis.rates[n] * z));
  }
  return sum.value();
}

double exact_unordered_cdf(double z, const SystemConfig& cfg) {
  validate(cfg);
  if (!(z >= 0.0)) throw std::domain_error("exact_unordered_cdf: z must be >= 0");
  const double radius = cfg.radius_cluster;
  const auto f = [&](double r) {
    return -std::expm1(-std::pow(r, cfg.alpha) * z) * 2.0 * r / (radius * radius);
  };
  numerics::QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_floor = 1e-15;
  return numerics::integrate(f, 0.0, radius, opts).value;
}

double laplace_comp(double s, double dist, const SystemConfig& cfg) {
  if (!(s >= 0.0)) throw std::domain_error("laplace_comp: s must be >= 0");
  if (!(dist > 0.0)) throw std::domain_error("laplace_comp: distance must be > 0");
  return 1.0 / (1.0 + s * cfg.power_ratio / std::pow(dist, cfg.alpha));
}

double laplace_inter(double s, const SystemConfig& cfg) {
  if (!(s >= 0.0)) throw std::domain_error("laplace_inter: s must be >= 0");
  if (!(cfg.alpha > 2.0)) throw std::domain_error("laplace_inter: alpha must exceed 2");
  return std::exp(inter_exponent_scale(cfg) * std::pow(s, 2.0 / cfg.alpha));
}

double laplace_inter_nearest(double s, double d, const SystemConfig& cfg) {
  require_alpha4(cfg, "laplace_inter_nearest");
  if (!(s >= 0.0)) throw std::domain_error("laplace_inter_nearest: s must be >= 0");
  if (!(d >= 0.0)) throw std::domain_error("laplace_inter_nearest: d must be >= 0");
  return laplace_inter(s, cfg) * std::exp(nearest_correction_log(s, d, cfg.lambda_c));
}

double disk_average(double a, double radius, double alpha) {
  if (!(a >= 0.0)) throw std::domain_error("disk_average: a must be >= 0");
  if (a == 0.0) return 1.0;
  const double y = std::pow(radius, alpha) / a;
  return 2.0 * y / (2.0 + alpha) * numerics::hyp2f1_special(alpha, -y);
}

std::vector<Composition> enumerate_compositions(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("enumerate_compositions: need K >= 1, N >= 1");
  if (binomial(k + n, n) > static_cast<double>(kMaxCompositions)) {
    throw EnumerationOverflow("C(K+N, N) exceeds the enumeration budget");
  }
  std::vector<Composition> out;
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  // Recursive fill of counts[i..n] with `left` units; the coefficient is the
  // running product of C(left, counts[i]).
  const auto fill = [&](auto&& self, int i, int left, std::uint64_t coef) -> void {
    if (i == n) {
      counts[n] = left;
      if (counts[0] != k) out.push_back({counts, coef, 0.0, 0.0});
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[i] = c;
      self(self, i + 1, left - c, checked_mul(coef, exact_binomial(left, c)));
    }
  };
  fill(fill, 0, k, 1);
  return out;
}

std::vector<Composition> enumerate_compositions(const ChebyshevBasis& basis, int k) {
  auto comps = enumerate_compositions(k, basis.order);
  for (auto& comp : comps) {
    double mu = 0.0;
    double weight = static_cast<double>(comp.coefficient);
    for (int i = 0; i <= basis.order; ++i) {
      const int c = comp.counts[i];
      if (c == 0) continue;
      mu += c * basis.extended_rate(i);
      weight *= std::pow(basis.extended_weight(i), c);
    }
    if (!(mu > 0.0)) throw std::logic_error("composition with k_0 != K must have mu > 0");
    comp.mu = mu;
    comp.weight = weight;
  }
  return comps;
}

namespace {

/// sum_terms weight * E[exp(-mu x (phi h0 / L + I + 1/rho))] with the CoMP
/// BS uniform in the disk. the outage raw value is 1 + this at x = eps.
class TypicalSum {
 public:
  explicit TypicalSum(const SystemConfig& cfg)
      : cfg_(cfg),
        dc_(derive_constants(cfg)),
        terms_(enumerate_compositions(cheb_basis(cfg), cfg.k_users)),
        inter_scale_(inter_exponent_scale(cfg)) {}

  double operator()(double x) const {
    NeumaierSum sum;
    for (const auto& t : terms_) {
      const double s = t.mu * x;
      const double log_noise_inter = -s / dc_.rho + inter_scale_ * std::pow(s, 2.0 / cfg_.alpha);
      sum.add(t.weight * std::exp(log_noise_inter) *
              disk_average(cfg_.power_ratio * s, cfg_.radius_comp, cfg_.alpha));
    }
    return sum.value();
  }

  const DerivedConstants& constants() const { return dc_; }
  double min_mu() const {
    double m = terms_.front().mu;
    for (const auto& t : terms_) m = std::min(m, t.mu);
    return m;
  }

 private:
  SystemConfig cfg_;
  DerivedConstants dc_;
  std::vector<Composition> terms_;
  double inter_scale_;
};

}  // namespace

OutageValue typical_noma_outage(const SystemConfig& cfg) {
  const TypicalSum sum(cfg);
  return clamp_outage(1.0 + sum(sum.constants().eps_noma));
}

double typical_noma_ergodic_rate(const SystemConfig& cfg) {
  const TypicalSum sum(cfg);
  // E[log2(1 + X)] = (1 / ln 2) int_0^inf (1 - F_X(x)) / (1 + x) dx, with
  // 1 - F_X(x) = -sum(x). Terms with small mu decay over many decades of x,
  // so integrate in v = ln x. Below e^-40 the integrand contributes < e^-40;
  // above x_max every term carries at most exp(-50).
  constexpr double kLowerLog = -40.0;
  const double upper_log = std::log(50.0 * sum.constants().rho / sum.min_mu());
  if (!(upper_log > kLowerLog)) return 0.0;
  const auto integrand = [&](double v) {
    const double x = std::exp(v);
    return -sum(x) * x / (1.0 + x);
  };
  return numerics::integrate(integrand, kLowerLog, upper_log, rate_quadrature()).value /
         std::numbers::ln2;
}

double ergodic_rate_integrand(double x, const SystemConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("ergodic_rate_integrand: x must be > 0");
  const TypicalSum sum(cfg);
  return -sum(x) / (1.0 + x);
}

double disk_noma_sum_rate(const SystemConfig& cfg, double r_ave) {
  validate(cfg);
  if (!(r_ave >= 0.0)) throw std::domain_error("disk_noma_sum_rate: r_ave must be >= 0");
  return pi * cfg.lambda_c * cfg.radius_comp * cfg.radius_comp * r_ave;
}

OutageValue nearest_noma_outage(const SystemConfig& cfg) {
  require_nearest(cfg, "nearest_noma_outage");
  const auto dc = derive_constants(cfg);
  const auto terms = enumerate_compositions(cheb_basis(cfg), cfg.k_users);
  const double eps1 = dc.eps_noma;
  const auto conditional = [&](double d) {
    const double d4 = d * d * d * d;
    NeumaierSum sum;
    for (const auto& t : terms) {
      const double s = eps1 * t.mu;
      sum.add(t.weight * std::exp(-s / dc.rho) * laplace_inter_nearest(s, d, cfg) * d4 /
              (d4 + cfg.power_ratio * s));
    }
    return sum.value();
  };
  return clamp_outage(1.0 + nearest_distance_average(cfg, conditional));
}

OutageValue nearest_comp_outage(const SystemConfig& cfg) {
  require_nearest(cfg, "nearest_comp_outage");
  const auto dc = derive_constants(cfg);
  const auto terms = enumerate_compositions(cheb_basis(cfg), cfg.k_users);
  const double eps1 = dc.eps_noma;
  const double eps0 = dc.eps_comp;
  const double phi = cfg.power_ratio;
  const auto conditional = [&](double d) {
    const double d4 = d * d * d * d;
    NeumaierSum sum;
    for (const auto& t : terms) {
      const double s1 = eps1 * t.mu;
      const double load = phi * s1 + d4;  // phi eps1 mu + d^4
      const double xi = s1 + eps0 * load / phi;
      sum.add(t.weight * std::exp(-s1 / dc.rho - eps0 * load / (phi * dc.rho)) *
              laplace_inter_nearest(xi, d, cfg) * d4 / load);
    }
    return sum.value();
  };
  return clamp_outage(1.0 + nearest_distance_average(cfg, conditional));
}

}  // namespace nnoma
