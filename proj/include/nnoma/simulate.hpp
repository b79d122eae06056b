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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nnoma/channel.hpp"
#include "nnoma/config.hpp"
#include "nnoma/pointprocess.hpp"
#include "nnoma/random.hpp"

namespace nnoma {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// How the "typical base station in the CoMP disk" is sampled for
/// NOMA-user metrics.
enum class TypicalBsMode {
  /// Typical BS uniform in the disk, the others an independent HPPP over the
  /// window (Slivnyak). Matches the averaging behind the closed forms.
  kPalm,
  /// One BS picked uniformly among those inside the disk; realizations with
  /// an empty disk are redrawn.
  kUniformPick,
  /// Every BS inside the disk contributes; pooled ratio over realizations
  /// with delete-one-chunk jackknife errors.
  kAllInDisk,
};

struct SimOptions {
  int threads = 1;
  TypicalBsMode typical = TypicalBsMode::kPalm;
};

/// Trials are grouped in chunks of this size; partial sums are reduced in
/// chunk order, so results do not depend on the worker count.
inline constexpr std::uint64_t kChunkTrials = 256;

// ---------------------------------------------------------------------------
// Single realization
// ---------------------------------------------------------------------------

enum class NomaRateMode {
  kFixed,     // qualified iff SINR >= eps_noma
  kAdaptive,  // every BS in the disk adapts its NOMA rate and qualifies
};

struct DecodingOutcome {
  std::vector<std::size_t> decoders;   // clusters whose BS lies in the CoMP disk
  std::vector<double> noma_sinrs;      // parallel to decoders
  std::vector<double> noma_rates;      // log2(1 + SINR), parallel to decoders
  std::vector<std::size_t> qualified;  // clusters that cancelled their NOMA user
  std::vector<double> comp_sinrs;      // CoMP-user SINR at each qualified BS
  std::optional<double> comp_sinr_best;
  double comp_rate = 0.0;              // log2(1 + best), 0 without a qualified BS
};

/// Indices of clusters whose base station lies within `radius` of the origin.
std::vector<std::size_t> clusters_in_disk(const NetworkGeometry& geometry, double radius);

/**
 * Runs the uplink SIC chain for every base station in the CoMP disk. `fading`
 * must carry cross gains for each of them. NOMA SINRs treat the CoMP user and
 * all other clusters' scheduled users as interference; the CoMP SINR at a
 * qualified BS keeps only interference from clusters that are not both
 * inside the disk and qualified.
 */
DecodingOutcome evaluate_realization(const SystemConfig& cfg, const NetworkGeometry& geometry,
                                     const FadingMatrix& fading,
                                     NomaRateMode mode = NomaRateMode::kFixed);

/// SINR for decoding cluster `decoder_row`'s NOMA user (row of fading.cross).
double noma_sinr(const SystemConfig& cfg, const DerivedConstants& dc,
                 const NetworkGeometry& geometry, const FadingMatrix& fading,
                 std::span<const SelectedUser> selected, std::size_t decoder_row);

// ---------------------------------------------------------------------------
// Estimators
//
// Each estimator has a batch form taking several configurations that share
// their random draws: they may differ only in power_noma, power_ratio,
// rate_noma, rate_comp, carrier_freq, bandwidth and noise_density. Entry v of
// a batch result is bit-identical to the single-configuration call on
// cfgs[v] with the same trials and seed.
// ---------------------------------------------------------------------------

/// Throws std::invalid_argument unless every entry draws the same networks
/// as the first one.
void require_shared_draws(std::span<const SystemConfig> cfgs);

MonteCarloEstimate simulate_noma_outage(const SystemConfig& cfg, std::uint64_t trials,
                                        std::uint64_t seed, const SimOptions& opts = {});

std::vector<MonteCarloEstimate> simulate_noma_outage_batch(std::span<const SystemConfig> cfgs,
                                                           std::uint64_t trials,
                                                           std::uint64_t seed,
                                                           const SimOptions& opts = {});

/// Batch over rate_noma values.
std::vector<MonteCarloEstimate> simulate_noma_outage_curve(const SystemConfig& cfg,
                                                           std::span<const double> rates,
                                                           std::uint64_t trials,
                                                           std::uint64_t seed,
                                                           const SimOptions& opts = {});

MonteCarloEstimate simulate_comp_outage(const SystemConfig& cfg, std::uint64_t trials,
                                        std::uint64_t seed, const SimOptions& opts = {});

struct FixedRateEstimates {
  MonteCarloEstimate comp_outage;
  MonteCarloEstimate bs_in_disk;          // mean |Phi_c ∩ D|
  MonteCarloEstimate qualified_in_disk;   // mean |Phi_bar_c ∩ D|
  MonteCarloEstimate qualified_fraction;  // pooled |Phi_bar ∩ D| / |Phi ∩ D|
  /// Per-realization |Phi_bar ∩ D| / |Phi ∩ D| averaged over realizations
  /// with a non-empty disk.
  MonteCarloEstimate mean_qualified_fraction;
  MonteCarloEstimate outage_sum_rate;  // rate_noma |Q| + rate_comp 1{CoMP ok}
};

/// Fixed-rate N-NOMA: CoMP outage plus the thinning and throughput it implies.
FixedRateEstimates simulate_fixed_rate(const SystemConfig& cfg, std::uint64_t trials,
                                       std::uint64_t seed, const SimOptions& opts = {});

std::vector<FixedRateEstimates> simulate_fixed_rate_batch(std::span<const SystemConfig> cfgs,
                                                          std::uint64_t trials,
                                                          std::uint64_t seed,
                                                          const SimOptions& opts = {});

struct ErgodicEstimates {
  MonteCarloEstimate noma_user_rate;
  MonteCarloEstimate noma_sum_rate;
  MonteCarloEstimate comp_rate;  // adaptive NOMA rates, every BS in the disk joins
  MonteCarloEstimate system_sum_rate;  // noma_sum_rate + comp_rate per realization
};

ErgodicEstimates simulate_ergodic_rates(const SystemConfig& cfg, std::uint64_t trials,
                                        std::uint64_t seed, const SimOptions& opts = {});

std::vector<ErgodicEstimates> simulate_ergodic_rates_batch(std::span<const SystemConfig> cfgs,
                                                           std::uint64_t trials,
                                                           std::uint64_t seed,
                                                           const SimOptions& opts = {});

struct NearestEstimates {
  MonteCarloEstimate noma_outage;
  MonteCarloEstimate comp_outage;
  MonteCarloEstimate outage_sum_rate;
  std::uint64_t order_violations = 0;  // realizations with CoMP success but NOMA outage
};

/// Nearest N-NOMA: only the BS closest to the CoMP user serves it, and no
/// interference is cancelled beyond its own NOMA user.
NearestEstimates simulate_nearest_scheme(const SystemConfig& cfg, std::uint64_t trials,
                                         std::uint64_t seed, const SimOptions& opts = {});

std::vector<NearestEstimates> simulate_nearest_scheme_batch(std::span<const SystemConfig> cfgs,
                                                            std::uint64_t trials,
                                                            std::uint64_t seed,
                                                            const SimOptions& opts = {});

struct OmaEstimates {
  MonteCarloEstimate comp_outage_oma;
  MonteCarloEstimate comp_rate_oma;
  MonteCarloEstimate nearest_outage_oma;
  MonteCarloEstimate nearest_rate_oma;
  std::uint64_t dominance_violations = 0;  // nearest succeeds where the disk fails
};

/// OMA baselines: the CoMP user transmits alone (noise-limited links).
OmaEstimates simulate_oma_baselines(const SystemConfig& cfg, std::uint64_t trials,
                                    std::uint64_t seed, const SimOptions& opts = {});

std::vector<OmaEstimates> simulate_oma_baselines_batch(std::span<const SystemConfig> cfgs,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       const SimOptions& opts = {});

/// E[exp(-s I_inter)] at a base station at the origin, from full PCP draws.
/// Cross fading is integrated out exactly given positions.
std::vector<MonteCarloEstimate> simulate_interference_laplace(const SystemConfig& cfg,
                                                              std::span<const double> s_values,
                                                              std::uint64_t trials,
                                                              std::uint64_t seed,
                                                              const SimOptions& opts = {});

// ---------------------------------------------------------------------------
// Trial engine
// ---------------------------------------------------------------------------

/// Per-chunk partial sums of each metric and of its square.
struct ChunkSums {
  std::uint64_t trials = 0;
  std::vector<double> sum;
  std::vector<double> sum_sq;
};

/// `trial(stream, metrics)` fills `metrics` (size n_metrics, zeroed) for one
/// trial; trial t receives RandomStream(seed).split(t).
using TrialFn = std::function<void(const RandomStream&, std::span<double>)>;

std::vector<ChunkSums> run_trials(std::uint64_t trials, std::uint64_t seed,
                                  std::size_t n_metrics, const TrialFn& trial, int threads);

/// Sample mean of one metric with its standard error.
MonteCarloEstimate estimate_mean(std::span<const ChunkSums> chunks, std::size_t metric,
                                 std::uint64_t seed);

/// Pooled ratio sum(num) / sum(den) with a delete-one-chunk jackknife error.
MonteCarloEstimate estimate_ratio(std::span<const ChunkSums> chunks, std::size_t num,
                                  std::size_t den, std::uint64_t seed);

}  // namespace nnoma
