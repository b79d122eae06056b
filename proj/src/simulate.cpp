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
#include "nnoma/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "nnoma/numerics.hpp"

namespace nnoma {

namespace {

constexpr std::uint64_t kTagFading = 0x46414445;    // "FADE"
constexpr std::uint64_t kTagTypical = 0x54595049;   // "TYPI"
constexpr std::uint64_t kTagAttempt = 0x41545450;   // "ATTP"
constexpr std::uint64_t kTagPick = 0x5049434b;      // "PICK"
constexpr std::uint64_t kTagSecond = 0x53454344;    // "SECD"
// Ring clusters use keys >= 2^32, so 0 never collides.
constexpr std::uint64_t kTypicalKey = 0;
constexpr int kMaxAttempts = 1'000'000;

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
}

double inverse_path_loss(const SystemConfig& cfg, Point2D a, Point2D b) {
  return 1.0 / path_loss_sq((a - b).norm2(), cfg.alpha);
}

/// A draw carrying a designated typical cluster plus the stream its fading
/// should come from.
struct TypicalDraw {
  NetworkGeometry geometry;
  std::size_t typical = 0;
  RandomStream fading_rng{0};
};

TypicalDraw draw_palm(const SystemConfig& cfg, const RandomStream& trial) {
  TypicalDraw draw{sample_geometry(cfg, trial), 0, trial.split(kTagFading)};
  auto stream = trial.split(kTagTypical);
  const Point2D bs = sample_uniform_disk(cfg.radius_comp, 1, stream).front();
  draw.geometry.clusters.push_back(sample_cluster_at(cfg, bs, kTypicalKey, trial));
  draw.typical = draw.geometry.clusters.size() - 1;
  return draw;
}

/// Redraws the network until the CoMP disk holds a base station; `accept`
/// picks which realization to keep.
template <typename Accept>
std::pair<NetworkGeometry, RandomStream> draw_until(const SystemConfig& cfg,
                                                    const RandomStream& trial, Accept accept) {
  if (cfg.lambda_c == 0.0) {
    throw std::invalid_argument("conditioning on a non-empty network needs lambda_c > 0");
  }
  const auto root = trial.split(kTagAttempt);
  for (int a = 0; a < kMaxAttempts; ++a) {
    const auto attempt = root.split(static_cast<std::uint64_t>(a));
    auto geometry = sample_geometry(cfg, attempt);
    if (accept(geometry)) return {std::move(geometry), attempt};
  }
  throw std::runtime_error("no admissible realization after repeated redraws");
}

TypicalDraw draw_uniform_pick(const SystemConfig& cfg, const RandomStream& trial) {
  auto [geometry, attempt] = draw_until(cfg, trial, [&](const NetworkGeometry& g) {
    return !clusters_in_disk(g, cfg.radius_comp).empty();
  });
  const auto inside = clusters_in_disk(geometry, cfg.radius_comp);
  auto pick = attempt.split(kTagPick);
  const auto typical = inside[pick.below(inside.size())];
  return {std::move(geometry), typical, attempt.split(kTagFading)};
}

TypicalDraw draw_typical(const SystemConfig& cfg, const RandomStream& trial, TypicalBsMode mode) {
  return mode == TypicalBsMode::kPalm ? draw_palm(cfg, trial) : draw_uniform_pick(cfg, trial);
}

/// Thresholds and noise of one configuration in a batch.
struct Variant {
  double phi = 0.0;
  double noise = 0.0;  // 1 / rho
  double eps_noma = 0.0;
  double eps_comp = 0.0;
  double rate_noma = 0.0;
  double rate_comp = 0.0;
};

Variant make_variant(const SystemConfig& cfg) {
  const auto dc = derive_constants(cfg);
  return {cfg.power_ratio, 1.0 / dc.rho, dc.eps_noma, dc.eps_comp, cfg.rate_noma, cfg.rate_comp};
}

std::vector<Variant> make_variants(std::span<const SystemConfig> cfgs) {
  require_shared_draws(cfgs);
  std::vector<Variant> variants;
  for (const auto& c : cfgs) variants.push_back(make_variant(c));
  return variants;
}

/// Power-free received quantities at one decoding base station.
struct Link {
  double user_gain = 0.0;     // composite gain of its scheduled NOMA user
  double comp_gain = 0.0;     // |h0|^2 / L(|x|) of the CoMP user
  double interference = 0.0;  // scheduled users of every other cluster
};

double noma_sinr_of(const Link& link, const Variant& v) {
  return link.user_gain / (v.phi * link.comp_gain + link.interference + v.noise);
}

/// Link at decoder row `row`; per-cluster interference terms go to `terms`
/// when given (zero at the decoder itself).
Link link_at(const SystemConfig& cfg, const NetworkGeometry& geometry, const FadingMatrix& fading,
             std::span<const SelectedUser> selected, std::size_t row,
             std::vector<double>* terms = nullptr) {
  const auto i = fading.decoders.at(row);
  const auto& cross = fading.cross.at(row);
  const Point2D bs = geometry.clusters[i].bs_position;
  if (terms) terms->assign(selected.size(), 0.0);
  numerics::NeumaierSum total;
  for (std::size_t j = 0; j < selected.size(); ++j) {
    if (j == i) continue;
    const double term = cross[j] * inverse_path_loss(cfg, selected[j].position, bs);
    total.add(term);
    if (terms) (*terms)[j] = term;
  }
  return {selected[i].gain, fading.clusters[i].comp / path_loss_sq(bs.norm2(), cfg.alpha),
          total.value()};
}

Link typical_link(const SystemConfig& cfg, const TypicalDraw& draw) {
  const std::size_t decoders[] = {draw.typical};
  const auto fading = draw_fading(cfg, draw.geometry, decoders, draw.fading_rng);
  const auto selected = select_users(cfg, draw.geometry, fading);
  return link_at(cfg, draw.geometry, fading, selected, 0);
}

/// Every base station inside the CoMP disk with its per-cluster interference.
struct DiskLinks {
  std::vector<std::size_t> decoders;
  std::vector<Link> links;
  std::vector<std::vector<double>> terms;
};

DiskLinks disk_links(const SystemConfig& cfg, const NetworkGeometry& geometry,
                     const FadingMatrix& fading) {
  DiskLinks out;
  out.decoders = clusters_in_disk(geometry, cfg.radius_comp);
  constexpr auto kNoRow = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> row_of(geometry.clusters.size(), kNoRow);
  for (std::size_t d = 0; d < fading.decoders.size(); ++d) row_of.at(fading.decoders[d]) = d;
  const auto selected = select_users(cfg, geometry, fading);
  out.terms.resize(out.decoders.size());
  for (std::size_t d = 0; d < out.decoders.size(); ++d) {
    const auto row = row_of[out.decoders[d]];
    if (row == kNoRow) {
      throw std::invalid_argument("missing cross fading for a base station inside the disk");
    }
    out.links.push_back(link_at(cfg, geometry, fading, selected, row, &out.terms[d]));
  }
  return out;
}

DiskLinks draw_disk_links(const SystemConfig& cfg, const RandomStream& trial) {
  const auto geometry = sample_geometry(cfg, trial);
  const auto inside = clusters_in_disk(geometry, cfg.radius_comp);
  const auto fading = draw_fading(cfg, geometry, inside, trial.split(kTagFading));
  return disk_links(cfg, geometry, fading);
}

DecodingOutcome decide(const DiskLinks& disk, const Variant& v, NomaRateMode mode) {
  DecodingOutcome out;
  out.decoders = disk.decoders;
  const auto n_clusters = disk.terms.empty() ? 0 : disk.terms.front().size();
  std::vector<char> is_qualified(n_clusters, 0);
  std::vector<std::size_t> qualified_rows;
  for (std::size_t d = 0; d < disk.decoders.size(); ++d) {
    const double sinr = noma_sinr_of(disk.links[d], v);
    out.noma_sinrs.push_back(sinr);
    out.noma_rates.push_back(std::log2(1.0 + sinr));
    if (mode == NomaRateMode::kAdaptive || sinr >= v.eps_noma) {
      out.qualified.push_back(disk.decoders[d]);
      qualified_rows.push_back(d);
      is_qualified[disk.decoders[d]] = 1;
    }
  }
  for (auto d : qualified_rows) {
    // Qualified clusters inside the disk are cancelled via the controller.
    numerics::NeumaierSum residual;
    const auto& terms = disk.terms[d];
    for (std::size_t j = 0; j < n_clusters; ++j) {
      if (!is_qualified[j]) residual.add(terms[j]);
    }
    const double sinr = v.phi * disk.links[d].comp_gain / (residual.value() + v.noise);
    out.comp_sinrs.push_back(sinr);
    if (!out.comp_sinr_best || sinr > *out.comp_sinr_best) out.comp_sinr_best = sinr;
  }
  if (out.comp_sinr_best) out.comp_rate = std::log2(1.0 + *out.comp_sinr_best);
  return out;
}

std::uint64_t count_events(std::span<const ChunkSums> chunks, std::size_t metric) {
  double total = 0.0;
  for (const auto& c : chunks) total += c.sum[metric];
  return static_cast<std::uint64_t>(std::llround(total));
}

template <typename T>
T single(std::vector<T> batch) {
  return std::move(batch.front());
}

}  // namespace

// ---------------------------------------------------------------------------
// Single realization
// ---------------------------------------------------------------------------

std::vector<std::size_t> clusters_in_disk(const NetworkGeometry& geometry, double radius) {
  std::vector<std::size_t> inside;
  const double r2 = radius * radius;
  for (std::size_t i = 0; i < geometry.clusters.size(); ++i) {
    if (geometry.clusters[i].bs_position.norm2() <= r2) inside.push_back(i);
  }
  return inside;
}

double noma_sinr(const SystemConfig& cfg, const DerivedConstants& dc,
                 const NetworkGeometry& geometry, const FadingMatrix& fading,
                 std::span<const SelectedUser> selected, std::size_t decoder_row) {
  Variant v;
  v.phi = cfg.power_ratio;
  v.noise = 1.0 / dc.rho;
  return noma_sinr_of(link_at(cfg, geometry, fading, selected, decoder_row), v);
}

DecodingOutcome evaluate_realization(const SystemConfig& cfg, const NetworkGeometry& geometry,
                                     const FadingMatrix& fading, NomaRateMode mode) {
  return decide(disk_links(cfg, geometry, fading), make_variant(cfg), mode);
}

// ---------------------------------------------------------------------------
// Trial engine
// ---------------------------------------------------------------------------

std::vector<ChunkSums> run_trials(std::uint64_t trials, std::uint64_t seed,
                                  std::size_t n_metrics, const TrialFn& trial, int threads) {
  require_trials(trials);
  const std::uint64_t n_chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ChunkSums> chunks(n_chunks);
  const RandomStream root(seed);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    std::vector<double> metrics(n_metrics);
    for (;;) {
      const auto c = next.fetch_add(1);
      if (c >= n_chunks) return;
      auto& out = chunks[c];
      out.sum.assign(n_metrics, 0.0);
      out.sum_sq.assign(n_metrics, 0.0);
      const auto first = c * kChunkTrials;
      const auto last = std::min(trials, first + kChunkTrials);
      out.trials = last - first;
      try {
        for (auto t = first; t < last; ++t) {
          std::fill(metrics.begin(), metrics.end(), 0.0);
          trial(root.split(t), metrics);
          for (std::size_t m = 0; m < n_metrics; ++m) {
            out.sum[m] += metrics[m];
            out.sum_sq[m] += metrics[m] * metrics[m];
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  const auto n_workers =
      static_cast<std::uint64_t>(std::clamp<std::int64_t>(threads, 1, static_cast<std::int64_t>(n_chunks)));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return chunks;
}

MonteCarloEstimate estimate_mean(std::span<const ChunkSums> chunks, std::size_t metric,
                                 std::uint64_t seed) {
  numerics::NeumaierSum sum, sum_sq;
  std::uint64_t n = 0;
  for (const auto& c : chunks) {
    sum.add(c.sum.at(metric));
    sum_sq.add(c.sum_sq.at(metric));
    n += c.trials;
  }
  MonteCarloEstimate est;
  est.trials = n;
  est.seed = seed;
  if (n == 0) return est;
  const double nn = static_cast<double>(n);
  est.mean = sum.value() / nn;
  if (n > 1) {
    const double var = std::max(0.0, (sum_sq.value() - nn * est.mean * est.mean) / (nn - 1.0));
    est.std_error = std::sqrt(var / nn);
  }
  return est;
}

MonteCarloEstimate estimate_ratio(std::span<const ChunkSums> chunks, std::size_t num,
                                  std::size_t den, std::uint64_t seed) {
  numerics::NeumaierSum total_num, total_den;
  std::uint64_t n = 0;
  for (const auto& c : chunks) {
    total_num.add(c.sum.at(num));
    total_den.add(c.sum.at(den));
    n += c.trials;
  }
  MonteCarloEstimate est;
  est.trials = n;
  est.seed = seed;
  est.mean = total_num.value() / total_den.value();
  const auto g = chunks.size();
  if (g < 2) return est;
  std::vector<double> leave_out(g);
  numerics::NeumaierSum mean_acc;
  for (std::size_t c = 0; c < g; ++c) {
    leave_out[c] = (total_num.value() - chunks[c].sum[num]) /
                   (total_den.value() - chunks[c].sum[den]);
    mean_acc.add(leave_out[c]);
  }
  const double mean = mean_acc.value() / static_cast<double>(g);
  numerics::NeumaierSum dev;
  for (double r : leave_out) dev.add((r - mean) * (r - mean));
  est.std_error = std::sqrt(static_cast<double>(g - 1) / static_cast<double>(g) * dev.value());
  return est;
}

// ---------------------------------------------------------------------------
// Estimators
// ---------------------------------------------------------------------------

void require_shared_draws(std::span<const SystemConfig> cfgs) {
  if (cfgs.empty()) throw std::invalid_argument("batch needs at least one configuration");
  const auto& a = cfgs.front();
  for (const auto& b : cfgs) {
    validate(b);
    const bool same = a.lambda_c == b.lambda_c && a.radius_cluster == b.radius_cluster &&
                      a.radius_comp == b.radius_comp && a.k_users == b.k_users &&
                      a.alpha == b.alpha && a.effective_sim_radius() == b.effective_sim_radius();
    if (!same) {
      throw std::invalid_argument(
          "batch entries must share lambda_c, radii, k_users, alpha and sim_radius");
    }
  }
}

std::vector<MonteCarloEstimate> simulate_noma_outage_batch(std::span<const SystemConfig> cfgs,
                                                           std::uint64_t trials,
                                                           std::uint64_t seed,
                                                           const SimOptions& opts) {
  require_trials(trials);
  const auto variants = make_variants(cfgs);
  const auto& cfg = cfgs.front();
  const auto nv = variants.size();
  std::vector<MonteCarloEstimate> result;

  if (opts.typical == TypicalBsMode::kAllInDisk) {
    // metrics: outage count per variant, then the number of BSs in the disk
    const auto chunks = run_trials(
        trials, seed, nv + 1,
        [&](const RandomStream& trial, std::span<double> m) {
          const auto disk = draw_disk_links(cfg, trial);
          for (const auto& link : disk.links) {
            for (std::size_t v = 0; v < nv; ++v) {
              m[v] += noma_sinr_of(link, variants[v]) < variants[v].eps_noma ? 1.0 : 0.0;
            }
          }
          m[nv] = static_cast<double>(disk.links.size());
        },
        opts.threads);
    for (std::size_t v = 0; v < nv; ++v) result.push_back(estimate_ratio(chunks, v, nv, seed));
    return result;
  }

  const auto chunks = run_trials(
      trials, seed, nv,
      [&](const RandomStream& trial, std::span<double> m) {
        const auto link = typical_link(cfg, draw_typical(cfg, trial, opts.typical));
        for (std::size_t v = 0; v < nv; ++v) {
          m[v] = noma_sinr_of(link, variants[v]) < variants[v].eps_noma ? 1.0 : 0.0;
        }
      },
      opts.threads);
  for (std::size_t v = 0; v < nv; ++v) result.push_back(estimate_mean(chunks, v, seed));
  return result;
}

MonteCarloEstimate simulate_noma_outage(const SystemConfig& cfg, std::uint64_t trials,
                                        std::uint64_t seed, const SimOptions& opts) {
  return single(simulate_noma_outage_batch({&cfg, 1}, trials, seed, opts));
}

std::vector<MonteCarloEstimate> simulate_noma_outage_curve(const SystemConfig& cfg,
                                                           std::span<const double> rates,
                                                           std::uint64_t trials,
                                                           std::uint64_t seed,
                                                           const SimOptions& opts) {
  std::vector<SystemConfig> cfgs(rates.size(), cfg);
  for (std::size_t r = 0; r < rates.size(); ++r) cfgs[r].rate_noma = rates[r];
  return simulate_noma_outage_batch(cfgs, trials, seed, opts);
}

std::vector<FixedRateEstimates> simulate_fixed_rate_batch(std::span<const SystemConfig> cfgs,
                                                          std::uint64_t trials,
                                                          std::uint64_t seed,
                                                          const SimOptions& opts) {
  require_trials(trials);
  const auto variants = make_variants(cfgs);
  const auto& cfg = cfgs.front();
  enum { kOutage, kInDisk, kQualified, kFraction, kNonEmpty, kSumRate, kCount };
  const auto chunks = run_trials(
      trials, seed, kCount * variants.size(),
      [&](const RandomStream& trial, std::span<double> metrics) {
        const auto disk = draw_disk_links(cfg, trial);
        for (std::size_t v = 0; v < variants.size(); ++v) {
          const auto& var = variants[v];
          const auto outcome = decide(disk, var, NomaRateMode::kFixed);
          const bool ok = outcome.comp_sinr_best && *outcome.comp_sinr_best >= var.eps_comp;
          const auto in_disk = static_cast<double>(outcome.decoders.size());
          const auto qualified = static_cast<double>(outcome.qualified.size());
          auto m = metrics.subspan(v * kCount, kCount);
          m[kOutage] = ok ? 0.0 : 1.0;
          m[kInDisk] = in_disk;
          m[kQualified] = qualified;
          m[kNonEmpty] = in_disk > 0.0 ? 1.0 : 0.0;
          m[kFraction] = in_disk > 0.0 ? qualified / in_disk : 0.0;
          m[kSumRate] = var.rate_noma * qualified + (ok ? var.rate_comp : 0.0);
        }
      },
      opts.threads);
  std::vector<FixedRateEstimates> result;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const auto b = v * kCount;
    FixedRateEstimates est;
    est.comp_outage = estimate_mean(chunks, b + kOutage, seed);
    est.bs_in_disk = estimate_mean(chunks, b + kInDisk, seed);
    est.qualified_in_disk = estimate_mean(chunks, b + kQualified, seed);
    est.qualified_fraction = estimate_ratio(chunks, b + kQualified, b + kInDisk, seed);
    est.mean_qualified_fraction = estimate_ratio(chunks, b + kFraction, b + kNonEmpty, seed);
    est.outage_sum_rate = estimate_mean(chunks, b + kSumRate, seed);
    result.push_back(est);
  }
  return result;
}

FixedRateEstimates simulate_fixed_rate(const SystemConfig& cfg, std::uint64_t trials,
                                       std::uint64_t seed, const SimOptions& opts) {
  return single(simulate_fixed_rate_batch({&cfg, 1}, trials, seed, opts));
}

MonteCarloEstimate simulate_comp_outage(const SystemConfig& cfg, std::uint64_t trials,
                                        std::uint64_t seed, const SimOptions& opts) {
  return simulate_fixed_rate(cfg, trials, seed, opts).comp_outage;
}

std::vector<ErgodicEstimates> simulate_ergodic_rates_batch(std::span<const SystemConfig> cfgs,
                                                           std::uint64_t trials,
                                                           std::uint64_t seed,
                                                           const SimOptions& opts) {
  require_trials(trials);
  const auto variants = make_variants(cfgs);
  const auto& cfg = cfgs.front();
  const bool pooled = opts.typical == TypicalBsMode::kAllInDisk;
  enum { kUserRate, kSumRate, kCompRate, kInDisk, kSystem, kCount };
  const auto chunks = run_trials(
      trials, seed, kCount * variants.size(),
      [&](const RandomStream& trial, std::span<double> metrics) {
        const auto disk = draw_disk_links(cfg, trial);
        std::optional<Link> typical;
        if (!pooled) typical = typical_link(cfg, draw_typical(cfg, trial.split(kTagSecond), opts.typical));
        for (std::size_t v = 0; v < variants.size(); ++v) {
          const auto outcome = decide(disk, variants[v], NomaRateMode::kAdaptive);
          numerics::NeumaierSum sum_rate;
          for (double r : outcome.noma_rates) sum_rate.add(r);
          auto m = metrics.subspan(v * kCount, kCount);
          m[kSumRate] = sum_rate.value();
          m[kCompRate] = outcome.comp_rate;
          m[kSystem] = sum_rate.value() + outcome.comp_rate;
          m[kInDisk] = static_cast<double>(outcome.decoders.size());
          m[kUserRate] = pooled ? sum_rate.value()
                                : std::log2(1.0 + noma_sinr_of(*typical, variants[v]));
        }
      },
      opts.threads);
  std::vector<ErgodicEstimates> result;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const auto b = v * kCount;
    ErgodicEstimates est;
    est.noma_user_rate = pooled ? estimate_ratio(chunks, b + kUserRate, b + kInDisk, seed)
                                : estimate_mean(chunks, b + kUserRate, seed);
    est.noma_sum_rate = estimate_mean(chunks, b + kSumRate, seed);
    est.comp_rate = estimate_mean(chunks, b + kCompRate, seed);
    est.system_sum_rate = estimate_mean(chunks, b + kSystem, seed);
    result.push_back(est);
  }
  return result;
}

ErgodicEstimates simulate_ergodic_rates(const SystemConfig& cfg, std::uint64_t trials,
                                        std::uint64_t seed, const SimOptions& opts) {
  return single(simulate_ergodic_rates_batch({&cfg, 1}, trials, seed, opts));
}

std::vector<NearestEstimates> simulate_nearest_scheme_batch(std::span<const SystemConfig> cfgs,
                                                            std::uint64_t trials,
                                                            std::uint64_t seed,
                                                            const SimOptions& opts) {
  require_trials(trials);
  const auto variants = make_variants(cfgs);
  const auto& cfg = cfgs.front();
  enum { kNomaOutage, kCompOutage, kSumRate, kViolation, kCount };
  const auto chunks = run_trials(
      trials, seed, kCount * variants.size(),
      [&](const RandomStream& trial, std::span<double> metrics) {
        auto [geometry, attempt] =
            draw_until(cfg, trial, [](const NetworkGeometry& g) { return !g.clusters.empty(); });
        std::size_t nearest = 0;
        for (std::size_t j = 1; j < geometry.clusters.size(); ++j) {
          if (geometry.clusters[j].bs_position.norm2() <
              geometry.clusters[nearest].bs_position.norm2()) {
            nearest = j;
          }
        }
        const std::size_t decoders[] = {nearest};
        const auto fading = draw_fading(cfg, geometry, decoders, attempt.split(kTagFading));
        const auto selected = select_users(cfg, geometry, fading);
        // No controller cancellation here: the CoMP link sees all interference.
        const auto link = link_at(cfg, geometry, fading, selected, 0);
        for (std::size_t v = 0; v < variants.size(); ++v) {
          const auto& var = variants[v];
          const bool noma_ok = noma_sinr_of(link, var) >= var.eps_noma;
          const bool link_ok =
              var.phi * link.comp_gain / (link.interference + var.noise) >= var.eps_comp;
          const bool comp_ok = noma_ok && link_ok;
          auto m = metrics.subspan(v * kCount, kCount);
          m[kNomaOutage] = noma_ok ? 0.0 : 1.0;
          m[kCompOutage] = comp_ok ? 0.0 : 1.0;
          m[kSumRate] = (noma_ok ? var.rate_noma : 0.0) + (comp_ok ? var.rate_comp : 0.0);
          m[kViolation] = comp_ok && !noma_ok ? 1.0 : 0.0;
        }
      },
      opts.threads);
  std::vector<NearestEstimates> result;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const auto b = v * kCount;
    NearestEstimates est;
    est.noma_outage = estimate_mean(chunks, b + kNomaOutage, seed);
    est.comp_outage = estimate_mean(chunks, b + kCompOutage, seed);
    est.outage_sum_rate = estimate_mean(chunks, b + kSumRate, seed);
    est.order_violations = count_events(chunks, b + kViolation);
    result.push_back(est);
  }
  return result;
}

NearestEstimates simulate_nearest_scheme(const SystemConfig& cfg, std::uint64_t trials,
                                         std::uint64_t seed, const SimOptions& opts) {
  return single(simulate_nearest_scheme_batch({&cfg, 1}, trials, seed, opts));
}

std::vector<OmaEstimates> simulate_oma_baselines_batch(std::span<const SystemConfig> cfgs,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       const SimOptions& opts) {
  require_trials(trials);
  const auto variants = make_variants(cfgs);
  const auto& cfg = cfgs.front();
  enum { kDiskOutage, kDiskRate, kNearOutage, kNearRate, kViolation, kCount };
  const double disk2 = cfg.radius_comp * cfg.radius_comp;
  const auto chunks = run_trials(
      trials, seed, kCount * variants.size(),
      [&](const RandomStream& trial, std::span<double> metrics) {
        const auto geometry = sample_geometry(cfg, trial);
        const auto fading = draw_fading(cfg, geometry, {}, trial.split(kTagFading));
        // Power-free link gains |h0|^2 / L; negative marks "no such BS".
        double disk_gain = -1.0;
        double nearest_gain = -1.0;
        double nearest_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < geometry.clusters.size(); ++j) {
          const double d2 = geometry.clusters[j].bs_position.norm2();
          const double gain = fading.clusters[j].comp / path_loss_sq(d2, cfg.alpha);
          if (d2 <= disk2) disk_gain = std::max(disk_gain, gain);
          if (d2 < nearest_d2) {
            nearest_d2 = d2;
            nearest_gain = gain;
          }
        }
        for (std::size_t v = 0; v < variants.size(); ++v) {
          const auto& var = variants[v];
          const double disk_snr = var.phi * disk_gain / var.noise;
          const double near_snr = var.phi * nearest_gain / var.noise;
          const bool disk_ok = disk_gain >= 0.0 && disk_snr >= var.eps_comp;
          const bool near_ok = nearest_gain >= 0.0 && near_snr >= var.eps_comp;
          auto m = metrics.subspan(v * kCount, kCount);
          m[kDiskOutage] = disk_ok ? 0.0 : 1.0;
          m[kDiskRate] = disk_gain > 0.0 ? std::log2(1.0 + disk_snr) : 0.0;
          m[kNearOutage] = near_ok ? 0.0 : 1.0;
          m[kNearRate] = nearest_gain > 0.0 ? std::log2(1.0 + near_snr) : 0.0;
          m[kViolation] = near_ok && !disk_ok ? 1.0 : 0.0;
        }
      },
      opts.threads);
  std::vector<OmaEstimates> result;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    const auto b = v * kCount;
    OmaEstimates est;
    est.comp_outage_oma = estimate_mean(chunks, b + kDiskOutage, seed);
    est.comp_rate_oma = estimate_mean(chunks, b + kDiskRate, seed);
    est.nearest_outage_oma = estimate_mean(chunks, b + kNearOutage, seed);
    est.nearest_rate_oma = estimate_mean(chunks, b + kNearRate, seed);
    est.dominance_violations = count_events(chunks, b + kViolation);
    result.push_back(est);
  }
  return result;
}

OmaEstimates simulate_oma_baselines(const SystemConfig& cfg, std::uint64_t trials,
                                    std::uint64_t seed, const SimOptions& opts) {
  return single(simulate_oma_baselines_batch({&cfg, 1}, trials, seed, opts));
}

std::vector<MonteCarloEstimate> simulate_interference_laplace(const SystemConfig& cfg,
                                                              std::span<const double> s_values,
                                                              std::uint64_t trials,
                                                              std::uint64_t seed,
                                                              const SimOptions& opts) {
  validate(cfg);
  for (double s : s_values) {
    if (!(s >= 0.0)) throw std::invalid_argument("simulate_interference_laplace: s must be >= 0");
  }
  const auto ns = s_values.size();
  const auto chunks = run_trials(
      trials, seed, ns,
      [&](const RandomStream& trial, std::span<double> m) {
        const auto geometry = sample_geometry(cfg, trial);
        const auto fading = draw_fading(cfg, geometry, {}, trial.split(kTagFading));
        const auto selected = select_users(cfg, geometry, fading);
        for (const auto& user : selected) {
          const double gain = 1.0 / path_loss_sq(user.position.norm2(), cfg.alpha);
          for (std::size_t k = 0; k < ns; ++k) m[k] += std::log1p(s_values[k] * gain);
        }
        // Given positions, E[exp(-s |h|^2 g)] = 1 / (1 + s g) for unit-mean |h|^2.
        for (std::size_t k = 0; k < ns; ++k) m[k] = std::exp(-m[k]);
      },
      opts.threads);
  std::vector<MonteCarloEstimate> result;
  for (std::size_t k = 0; k < ns; ++k) result.push_back(estimate_mean(chunks, k, seed));
  return result;
}

}  // namespace nnoma
